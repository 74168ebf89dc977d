import csv
import io
import json
import logging
import sys
from pathlib import Path

import typer
from sympy.polys.domains.domain import Domain

from latnak.algebra import BoundQuiverAlgebra, IntMatrix, cartan
from latnak.algebra.cartan import _label_to_json
from latnak.algebra.quiver import Vertex, show_vertex
from latnak.cli.session import Session, guarded, parse_ints, parse_pair, resolve_algebra, resolve_lattice
from latnak.exceptions import PreconditionError
from latnak.families import SFamily, duality_family, lad_family, lad_family_prime, nak_family, trivial_family
from latnak.homalg import ProjComplex, injective_resolution_as_proj, simple_resolution, stalk_projective
from latnak.invariants import coxeter_matrix, coxeter_polynomial
from latnak.lattice import GridPoint
from latnak.serialize import algebra_to_dict, complex_to_dict, family_to_dict

logger = logging.getLogger(__name__)

EMIT_OBJECTS = ("algebra", "cartan", "coxeter", "lattice", "family", "quiver", "complex")

FAMILY_KINDS = ("trivial", "duality", "lad", "lad-prime", "nak")

COMPLEX_KINDS = ("projective", "simple", "injective")


def build_family(
    kind: str,
    field: Domain,
    verify: bool,
    p: int | None = None,
    q: int | None = None,
    r: int | None = None,
    young: str | None = None,
    pair: str | None = None,
    lattice_file: Path | None = None,
) -> SFamily:
    """
    Build the family selected by --family and its parameters

    Raises:
        PreconditionError: If the kind is unknown or a parameter is missing
    """

    match kind:
        case "trivial":
            return trivial_family(resolve_lattice(young, pair, lattice_file), field)
        case "duality":
            if pair is None:
                raise PreconditionError("--family duality", "needs --pair")
            return duality_family(parse_pair(pair), field)
        case "lad" | "lad-prime":
            if p is None or q is None:
                raise PreconditionError(f"--family {kind}", "needs --p and --q")
            build = lad_family if kind == "lad" else lad_family_prime
            return build(p, q, field, verify)
        case "nak":
            if p is None or q is None:
                raise PreconditionError("--family nak", "needs --p and --q")
            return nak_family(p, q, r or 0, field, verify)
        case _:
            raise PreconditionError("--family", f"unknown kind '{kind}'", " | ".join(FAMILY_KINDS))


def parse_vertex(text: str, algebra: BoundQuiverAlgebra) -> Vertex:
    """
    Find the vertex written as "3" or "1,2" among the vertices of an algebra
    """

    values = parse_ints(text, option="--vertex")
    vertex: Vertex = values[0] if len(values) == 1 else GridPoint(*values) if len(values) == 2 else values
    if vertex not in algebra.position:
        shown = ", ".join(show_vertex(v) for v in algebra.vertices)
        raise PreconditionError("--vertex", f"{text} is not a vertex of {algebra.name}", shown)
    return vertex


def build_complex(algebra: BoundQuiverAlgebra, vertex: Vertex, kind: str) -> ProjComplex:
    match kind:
        case "projective":
            return stalk_projective(algebra, vertex)
        case "simple":
            return simple_resolution(algebra, vertex)
        case "injective":
            return injective_resolution_as_proj(algebra, vertex)
        case _:
            raise PreconditionError("--complex", f"unknown kind '{kind}'", " | ".join(COMPLEX_KINDS))


def _matrix_csv(matrix: IntMatrix) -> str:
    rows = [["", *(show_vertex(v) for v in matrix.columns)]]
    rows.extend([show_vertex(label), *row] for label, row in zip(matrix.labels, matrix.entries))

    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="\n").writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _algebra_text(algebra: BoundQuiverAlgebra) -> str:
    lines = [f"{algebra.name}  dim {algebra.dim} over {algebra.field}"]
    lines.append("vertices: " + " ".join(show_vertex(v) for v in algebra.vertices))
    if algebra.quiver is not None:
        lines.append("arrows: " + ", ".join(algebra.quiver.describe()))
    if algebra.relations:
        lines.append("relations: " + ", ".join(algebra.relations))
    return "\n".join(lines)


def _family_text(fam: SFamily) -> str:
    return "\n".join([f"{fam.name} over {fam.algebra.name}", *fam.describe()])


def render(
    obj: str,
    algebra: BoundQuiverAlgebra | None,
    family: SFamily | None,
    vertex: str | None,
    complex_kind: str,
    young: str | None,
    pair: str | None,
    lattice_file: Path | None,
) -> tuple[dict | list, str, str | None]:
    """
    The JSON payload, the text rendering and (for matrices) the CSV rendering of one object
    """

    match obj:
        case "algebra" | "quiver" | "cartan" | "coxeter" | "complex" if algebra is None:
            raise PreconditionError(f"emit {obj}", "needs --algebra (or --family)")
        case "algebra":
            return algebra_to_dict(algebra), _algebra_text(algebra), None  # type: ignore[arg-type]
        case "quiver":
            quiver = algebra.quiver  # type: ignore[union-attr]
            if quiver is None:
                raise PreconditionError("emit quiver", f"{algebra.name} has no presenting quiver")  # type: ignore[union-attr]
            data = {
                "vertices": [_label_to_json(v) for v in quiver.vertices],
                "arrows": [
                    {"name": a.name, "source": show_vertex(a.source), "target": show_vertex(a.target)}
                    for a in quiver.arrows
                ],
                "relations": list(algebra.relations),  # type: ignore[union-attr]
            }
            return data, "\n".join(quiver.describe()), None
        case "cartan":
            C = cartan(algebra)  # type: ignore[arg-type]
            return C.to_dict(), C.format(), _matrix_csv(C)
        case "coxeter":
            C = cartan(algebra)  # type: ignore[arg-type]
            Phi = coxeter_matrix(C)
            polynomial = coxeter_polynomial(C)
            data = {**Phi.to_dict(), "polynomial": polynomial.to_list(), "polynomial_text": str(polynomial)}
            return data, f"{Phi.format()}\n\nχ(x) = {polynomial}", _matrix_csv(Phi)
        case "complex":
            if vertex is None:
                raise PreconditionError("emit complex", "needs --vertex")
            X = build_complex(algebra, parse_vertex(vertex, algebra), complex_kind)  # type: ignore[arg-type]
            return complex_to_dict(X), X.describe(), None
        case "lattice":
            S = family.support if family is not None else resolve_lattice(young, pair, lattice_file)
            return S.to_dict(), str(S), None
        case "family":
            if family is None:
                raise PreconditionError("emit family", "needs --family")
            return family_to_dict(family), _family_text(family), None
        case _:
            raise PreconditionError("emit", f"unknown object '{obj}'", " | ".join(EMIT_OBJECTS))


def emit(
    ctx: typer.Context,
    obj: str = typer.Argument(..., metavar="OBJECT", help="algebra, cartan, coxeter, lattice, family, quiver or complex."),
    algebra_kind: str | None = typer.Option(
        None, "--algebra", "-a", help="nakayama, an, nn, lattice, shriek or intro."
    ),
    n: int | None = typer.Option(None, "--n", help="Number of vertices."),
    l: int | None = typer.Option(None, "--l", help="Nilpotency bound of a Nakayama algebra."),  # noqa: E741
    young: str | None = typer.Option(None, "--young", help="Young set Y(s,t,u) given as 's,t,u'."),
    pair: str | None = typer.Option(None, "--pair", help="Composition pair 'p1,p2;q1,q2'."),
    lattice_file: Path | None = typer.Option(None, "--lattice-file", help="Lattice set read from a JSON file."),
    family_kind: str | None = typer.Option(None, "--family", help="trivial, duality, lad, lad-prime or nak."),
    p: int | None = typer.Option(None, "--p", help="p of lad and nak families."),
    q: int | None = typer.Option(None, "--q", help="q of lad and nak families."),
    r: int | None = typer.Option(None, "--r", help="r of nak families."),
    vertex: str | None = typer.Option(None, "--vertex", help="Vertex of the emitted complex, '3' or '1,2'."),
    complex_kind: str = typer.Option("projective", "--complex", help="projective, simple or injective."),
    output: Path | None = typer.Option(None, "--output", "-o", help="Write the JSON payload to this file."),
) -> None:
    """
    Dump an algebra, its Cartan or Coxeter matrix, a lattice set, a family or a complex

    Examples:

        # Cartan matrix of N(6,4) as CSV
        latnak --format csv emit cartan --algebra nakayama --n 6 --l 4

        # Coxeter polynomial of L(Y(2,3,1))
        latnak emit coxeter --algebra lattice --young 2,3,1

        # Shifted simples of L!(2,1;2,1) as JSON
        latnak --format json emit family --family duality --pair "2,1;2,1"
    """

    session: Session = ctx.obj

    with guarded():
        family = None
        if family_kind is not None:
            family = build_family(family_kind, session.field, session.verify, p, q, r, young, pair, lattice_file)

        algebra = None
        if algebra_kind is not None:
            algebra = resolve_algebra(algebra_kind, session.field, n, l, young, pair, lattice_file)
        elif family is not None:
            algebra = family.algebra

        data, text, table = render(obj, algebra, family, vertex, complex_kind, young, pair, lattice_file)
        logger.debug("emit %s", obj)

        if output is not None:
            output.write_text(json.dumps(data, indent=2, ensure_ascii=False), encoding="utf-8")

        reporter = session.reporter()
        match session.format:
            case "json":
                reporter.emit(json.dumps(data, indent=2, ensure_ascii=False))
            case "csv":
                if table is None:
                    raise PreconditionError("--format csv", f"{obj} has no CSV rendering", "cartan | coxeter")
                sys.stdout.write(table + "\n")
            case _:
                reporter.emit(text)
