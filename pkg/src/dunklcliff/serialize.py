"""JSON wire formats.

Polynomial schema (version 1): a term is {"exp": [..], "blade": int,
"coeff": "p/q"}, a polynomial is the list of its terms sorted by graded-lex
monomial order and ascending blade mask, so identical inputs always produce
byte-identical output.  Rationals travel as strings to avoid any precision
loss in consumers.

Root-system config: {"m": 2, "roots": [[1,0],[0,1]], "multiplicities":
["1/2","1/3"]}; root coordinates may be numbers or "p/q" strings.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .clifford import CliffordElement
from .polys import MVPoly, monomial_key
from .roots import RootSystem

SCHEMA_VERSION = 1


def fraction_to_str(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(s) -> Fraction:
    if isinstance(s, (int, str)):
        return Fraction(s)
    if isinstance(s, float):
        raise ValueError(f"refusing float {s}; write it as a 'p/q' string")
    raise ValueError(f"cannot parse rational from {s!r}")


def poly_to_terms(p: MVPoly) -> list[dict]:
    out = []
    for exps, c in sorted(p.terms.items(), key=lambda item: monomial_key(item[0])):
        for mask in sorted(c.coeffs):
            out.append(
                {
                    "exp": list(exps),
                    "blade": mask,
                    "coeff": fraction_to_str(c.coeffs[mask]),
                }
            )
    return out


def poly_from_terms(terms: list[dict], m: int) -> MVPoly:
    acc: dict[tuple, dict[int, Fraction]] = {}
    for term in terms:
        exps = tuple(int(e) for e in term["exp"])
        mask = int(term["blade"])
        bucket = acc.setdefault(exps, {})
        bucket[mask] = bucket.get(mask, Fraction(0)) + parse_fraction(term["coeff"])
    return MVPoly(m, {e: CliffordElement(m, cs) for e, cs in acc.items()})


def basis_document(m: int, degree: int, polys: list[MVPoly]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "m": m,
        "degree": degree,
        "basis": [poly_to_terms(p) for p in polys],
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def load_root_system(path: str) -> RootSystem:
    with open(path) as fh:
        data = json.load(fh)
    try:
        m = int(data["m"])
        roots = [[parse_fraction(c) for c in root] for root in data["roots"]]
        mults = [parse_fraction(k) for k in data["multiplicities"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed root-system config {path}: {exc}") from exc
    return RootSystem(m, roots, mults)


def root_system_document(R: RootSystem) -> dict:
    return {
        "m": R.m,
        "roots": [[fraction_to_str(c) for c in root] for root in R.positive_roots],
        "multiplicities": [fraction_to_str(k) for k in R.multiplicities],
    }
