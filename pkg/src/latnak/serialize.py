"""
JSON and CSV encodings of every artifact latnak emits.

Field elements are written as exact strings ("3", "-1/2"); grid points as two-element lists.
Complexes carry the descriptor of their algebra, families carry it once for all members.
"""

import csv
import json
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any, TextIO

from latnak.algebra import BoundQuiverAlgebra, IntMatrix, algebra_from_descriptor
from latnak.algebra.cartan import _label_from_json, _label_to_json
from latnak.constants import PAIRS_COLUMNS, PAIRS_CSV_HEADER
from latnak.exceptions import SerializationError
from latnak.families import AxiomReport, LatticeChain, SFamily
from latnak.homalg import ProjComplex
from latnak.invariants import Certificate
from latnak.lattice import GridPoint, LatticeSet
from latnak.linalg import format_scalar, scalar


def algebra_to_dict(algebra: BoundQuiverAlgebra) -> dict:
    if algebra.descriptor is None:
        raise SerializationError(f"{algebra.name} has no descriptor and cannot be written")
    return dict(algebra.descriptor)


def complex_to_dict(X: ProjComplex, with_algebra: bool = True) -> dict:
    """
    Encode a complex as degrees with summand vertices and sparse differentials

    Each differential entry lists the terms of its algebra element as
    ``[source vertex, arrow word, coefficient]``.
    """

    algebra = X.algebra
    differentials = []
    for k, d in sorted(X.differentials.items()):
        for (r, c), element in sorted(d.items()):
            terms = [
                [_label_to_json(algebra.basis[i].source), list(algebra.basis[i].word), format_scalar(v, algebra.field)]
                for i, v in sorted(element.items())
            ]
            differentials.append({"degree": k, "row": r, "col": c, "terms": terms})

    data: dict[str, Any] = {
        "terms": {str(k): [_label_to_json(v) for v in vertices] for k, vertices in X.terms.items()},
        "differentials": differentials,
    }
    if with_algebra:
        data = {"algebra": algebra_to_dict(algebra), **data}
    return data


def complex_from_dict(data: dict, algebra: BoundQuiverAlgebra | None = None) -> ProjComplex:
    """
    Decode a complex, rebuilding its algebra from the descriptor unless one is given

    Raises:
        SerializationError: If the payload is malformed or names a path the algebra lacks
    """

    try:
        if algebra is None:
            algebra = algebra_from_descriptor(data["algebra"])

        terms = {int(k): tuple(_label_from_json(v) for v in vertices) for k, vertices in data["terms"].items()}
        differentials: dict[int, dict] = {}
        for entry in data.get("differentials", []):
            k, r, c = int(entry["degree"]), int(entry["row"]), int(entry["col"])
            target = terms[k + 1][r]
            element = {}
            for source, word, coefficient in entry["terms"]:
                index = algebra.find(_label_from_json(source), target, tuple(word))
                if index is None:
                    raise SerializationError(f"no basis path {word} ending at {target} in {algebra.name}")
                element[index] = scalar(coefficient, algebra.field)
            differentials.setdefault(k, {})[(r, c)] = element

    except (KeyError, IndexError, TypeError, ValueError) as e:
        raise SerializationError(f"Malformed complex: {e}") from e

    return ProjComplex(algebra, terms, differentials)


def _point_key(p: GridPoint) -> str:
    return f"{p.i},{p.j}"


def _parse_point_key(key: str) -> GridPoint:
    i, j = key.split(",")
    return GridPoint(int(i), int(j))


def family_to_dict(fam: SFamily) -> dict:
    return {
        "name": fam.name,
        "algebra": algebra_to_dict(fam.algebra),
        "support": fam.support.to_dict(),
        "members": {_point_key(p): complex_to_dict(X, with_algebra=False) for p, X in fam.members.items()},
    }


def family_from_dict(data: dict) -> SFamily:
    """
    Decode a family; all members share one rebuilt algebra

    Raises:
        SerializationError: If the payload is malformed
    """

    try:
        algebra = algebra_from_descriptor(data["algebra"])
        support = LatticeSet.from_dict(data["support"])
        members = {_parse_point_key(k): complex_from_dict(v, algebra) for k, v in data["members"].items()}
    except (KeyError, TypeError, ValueError) as e:
        raise SerializationError(f"Malformed family: {e}") from e

    return SFamily(support, algebra, members, data.get("name", ""))


def lattice_from_dict(data: dict | list) -> LatticeSet:
    """
    Decode a lattice set, accepting either ``{"points": [[i, j], ...]}`` or the bare list
    """

    try:
        if isinstance(data, list):
            return LatticeSet.of(tuple(p) for p in data)
        return LatticeSet.from_dict(data)
    except (KeyError, TypeError, ValueError) as e:
        raise SerializationError(f"Malformed lattice set: {e}") from e


def to_json(obj: Any) -> str:
    """
    Encode any latnak artifact as JSON text
    """

    match obj:
        case SFamily():
            data = family_to_dict(obj)
        case ProjComplex():
            data = complex_to_dict(obj)
        case BoundQuiverAlgebra():
            data = algebra_to_dict(obj)
        case LatticeSet() | IntMatrix() | Certificate() | AxiomReport() | LatticeChain():
            data = obj.to_dict()
        case list():
            return "[" + ",\n".join(to_json(item) for item in obj) + "]"
        case dict():
            data = obj
        case _:
            raise SerializationError(f"Cannot encode {type(obj).__name__}")

    return json.dumps(data, indent=2, ensure_ascii=False)


def read_json(path: Path | str) -> Any:
    """
    Read a JSON artifact from disk

    Raises:
        SerializationError: If the file is missing or not valid JSON
    """

    path = Path(path)
    try:
        return json.loads(path.read_text())
    except FileNotFoundError as e:
        raise SerializationError(f"File not found: {path}") from e
    except json.JSONDecodeError as e:
        raise SerializationError(f"Invalid JSON in {path}: {e}") from e


def write_pairs_csv(rows: Iterable[Sequence[object]], output: TextIO) -> None:
    """
    Write a pair table with its versioned header comment
    """

    output.write(PAIRS_CSV_HEADER + "\n")
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(PAIRS_COLUMNS)
    for row in rows:
        writer.writerow([str(value) for value in row])


def read_pairs_csv(source: TextIO) -> list[dict[str, str]]:
    """
    Read a pair table written by ``write_pairs_csv``

    Raises:
        SerializationError: If the header comment or the columns do not match
    """

    lines = source.read().splitlines()
    if not lines or lines[0] != PAIRS_CSV_HEADER:
        raise SerializationError(f"Missing header '{PAIRS_CSV_HEADER}'")

    reader = csv.DictReader(lines[1:])
    if tuple(reader.fieldnames or ()) != PAIRS_COLUMNS:
        raise SerializationError(f"Unexpected columns {reader.fieldnames}")
    return list(reader)
