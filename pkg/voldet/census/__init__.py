from decimal import Decimal
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from voldet.links.notation import BraidWord, PDText


class CensusRow(BaseModel):
    line: int
    name: str
    pd: Optional[PDText] = None
    braid: Optional[BraidWord] = None
    det: Optional[int] = Field(default=None, ge=0)
    volume: Optional[Decimal] = Field(default=None, ge=0)
    crossings: Optional[int] = Field(default=None, ge=0)

    @model_validator(mode='after')
    def check_diagram(self):
        if self.pd is None and self.braid is None:
            raise ValueError('row has neither a PD code nor a braid word')
        return self


class RowError(BaseModel):
    line: int
    name: Optional[str] = None
    message: str


class CensusTable(BaseModel):
    rows: list[CensusRow] = []
    errors: list[RowError] = []

    def __len__(self):
        return len(self.rows)
