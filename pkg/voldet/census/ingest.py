import csv
from decimal import Decimal, InvalidOperation

from pydantic import ValidationError

from voldet.census import CensusRow, CensusTable, RowError
from voldet.errors import CensusError, NotationError
from voldet.links.notation import parse_braid, parse_pd

COLUMNS = ('name', 'pd', 'braid', 'det', 'volume', 'crossings')


def ingest_csv(path) -> CensusTable:
    try:
        with open(path, 'r', encoding='utf-8', newline='') as f:
            return ingest_lines(f)
    except OSError as e:
        raise CensusError(f'cannot read census table {path}: {e.strerror}') from e


def ingest_lines(lines) -> CensusTable:
    reader = csv.DictReader(lines)
    header = [h.strip() for h in (reader.fieldnames or [])]
    if 'name' not in header:
        raise CensusError('census table has no "name" column')
    if 'pd' not in header and 'braid' not in header:
        raise CensusError('census table needs a "pd" or a "braid" column')
    reader.fieldnames = header

    table = CensusTable()
    for raw in reader:
        line = reader.line_num
        name = (raw.get('name') or '').strip()
        try:
            table.rows.append(_row(line, name, raw))
        except (NotationError, ValueError) as e:
            table.errors.append(RowError(line=line, name=name or None, message=_message(e)))
    return table


def _message(e):
    if isinstance(e, ValidationError):
        err = e.errors()[0]
        loc = '.'.join(str(x) for x in err['loc'])
        msg = err['msg'].removeprefix('Value error, ')
        return f'{loc}: {msg}' if loc else msg
    return str(e)


def _cell(raw, key):
    value = raw.get(key)
    if value is None:
        return None
    value = value.strip()
    return value or None


def _int_cell(raw, key):
    value = _cell(raw, key)
    if value is None:
        return None
    try:
        return int(value)
    except ValueError:
        raise ValueError(f'{key}: {value!r} is not an integer')


def _decimal_cell(raw, key):
    value = _cell(raw, key)
    if value is None:
        return None
    try:
        return Decimal(value)
    except InvalidOperation:
        raise ValueError(f'{key}: {value!r} is not a decimal number')


def _row(line, name, raw) -> CensusRow:
    if not name:
        raise ValueError('name: empty')
    pd_text = _cell(raw, 'pd')
    braid_text = _cell(raw, 'braid')
    return CensusRow(
        line=line,
        name=name,
        pd=parse_pd(pd_text) if pd_text else None,
        braid=parse_braid(braid_text) if braid_text else None,
        det=_int_cell(raw, 'det'),
        volume=_decimal_cell(raw, 'volume'),
        crossings=_int_cell(raw, 'crossings'),
    )
