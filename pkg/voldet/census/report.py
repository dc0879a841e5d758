import csv
import json

from voldet.census.validate import ValidationReport

CSV_COLUMNS = ('line', 'name', 'c', 't', 'det', 'tabulated_det', 'alternating', 'prime', 'reduced',
               'arborescent', 'twist_audit', 'verdict', 'method', 'margin', 'violation', 've_exceeded', 'discrepancy',
               'error')


def write_json(report: ValidationReport, fh):
    fh.write(report.model_dump_json(indent=2))
    fh.write('\n')


def _flag(value):
    if value is None:
        return ''
    return 'true' if value else 'false'


def csv_rows(report: ValidationReport):
    for res in report.results:
        cert = res.certificate
        cls = res.classifications
        yield {
            'line': res.line,
            'name': res.name,
            'c': '' if res.c is None else res.c,
            't': '' if res.t is None else res.t,
            'det': '' if res.det is None else res.det,
            'tabulated_det': '' if res.tabulated_det is None else res.tabulated_det,
            'alternating': _flag(cls.get('alternating')),
            'prime': _flag(cls.get('prime')),
            'reduced': _flag(cls.get('reduced')),
            'arborescent': _flag(cls.get('arborescent')),
            'twist_audit': res.twist_audit or '',
            'verdict': cert.verdict if cert else '',
            'method': cert.method if cert else '',
            'margin': (cert.margin or '') if cert else '',
            'violation': _flag(cert.violation) if cert else '',
            've_exceeded': _flag(res.ve_exceeded),
            'discrepancy': '; '.join(f'{d.field}: computed {d.computed}, tabulated {d.tabulated} ({d.method})'
                                     for d in res.discrepancies),
            'error': res.error or '',
        }


def write_csv(report: ValidationReport, fh):
    """flat summary; the constants block leads as '#' comment lines"""
    for key, value in report.constants.items():
        if isinstance(value, dict):
            value = json.dumps(value, sort_keys=True)
        fh.write(f'# {key}: {value}\n')
    for err in report.ingest_errors:
        fh.write(f'# ingest error line {err.line}: {err.message}\n')
    writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator='\n')
    writer.writeheader()
    for row in csv_rows(report):
        writer.writerow(row)
