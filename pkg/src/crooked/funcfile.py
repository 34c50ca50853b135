"""Persistent JSON format for functions: canonical, diff-friendly, and
round-trip stable. The only persistence format the CLI emits or reads."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import MalformedFile
from .field import FieldCtx
from .vbf import Multinomial, TruthTable, from_multinomial, multinomial

SCHEMA_VERSION = 1


def _hex(v: int) -> str:
    return format(v, "x")


@dataclass
class FunctionFile:
    n: int
    modulus: int
    representation: str  # "multinomial" | "truthtable"
    terms: Optional[list] = None   # [(coeff, exp)] when multinomial
    values: Optional[list] = None  # length-2^n ints when truthtable
    provenance: dict = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    def ctx(self) -> FieldCtx:
        return FieldCtx(self.n, self.modulus)

    def to_multinomial(self) -> Multinomial:
        if self.representation != "multinomial":
            raise MalformedFile("file does not carry a multinomial")
        return multinomial(self.ctx(), self.terms)

    def to_truthtable(self) -> TruthTable:
        if self.representation == "multinomial":
            return from_multinomial(self.to_multinomial())
        return TruthTable(self.ctx(), self.values)


def from_multinomial_repr(m: Multinomial, provenance: Optional[dict] = None) -> FunctionFile:
    return FunctionFile(
        n=m.ctx.n,
        modulus=m.ctx.modulus,
        representation="multinomial",
        terms=[list(t) for t in m.terms],
        provenance=provenance or {},
    )


def from_truthtable_repr(t: TruthTable, provenance: Optional[dict] = None) -> FunctionFile:
    return FunctionFile(
        n=t.ctx.n,
        modulus=t.ctx.modulus,
        representation="truthtable",
        values=[int(v) for v in t.values],
        provenance=provenance or {},
    )


def serialize(ff: FunctionFile) -> str:
    doc = {
        "schema_version": ff.schema_version,
        "n": ff.n,
        "modulus": _hex(ff.modulus),
        "representation": ff.representation,
        "provenance": ff.provenance,
    }
    if ff.representation == "multinomial":
        doc["terms"] = [{"coeff": _hex(c), "exp": e} for c, e in ff.terms]
    else:
        doc["values"] = [_hex(v) for v in ff.values]
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def parse(text: str) -> FunctionFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedFile(f"not valid JSON: {e}") from None
    try:
        n = int(doc["n"])
        modulus = int(doc["modulus"], 16)
        rep = doc["representation"]
        if rep == "multinomial":
            terms = [(int(t["coeff"], 16), int(t["exp"])) for t in doc["terms"]]
            values = None
        elif rep == "truthtable":
            values = [int(v, 16) for v in doc["values"]]
            terms = None
            if len(values) != 1 << n:
                raise MalformedFile(f"truth table length {len(values)} != 2^{n}")
        else:
            raise MalformedFile(f"unknown representation {rep!r}")
        return FunctionFile(
            n=n,
            modulus=modulus,
            representation=rep,
            terms=terms,
            values=values,
            provenance=doc.get("provenance", {}),
            schema_version=int(doc.get("schema_version", SCHEMA_VERSION)),
        )
    except MalformedFile:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedFile(f"bad function file: {e}") from None
