"""
Checkers for the axioms of weak S-families, S-families and Young-diagram families, together with
the structural lemmas that hold for every S-family (row lemma, gluing, LSS1, the triangle lemma)
and the reconstruction of the endomorphism algebra.

Every checker records the first failure of each axiom as a witness and never raises on a failing
family; preconditions on the support are the only errors.
"""

import logging
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field

from latnak.algebra import IntMatrix, cartan, cartan_lattice, nn
from latnak.constants import ISO_CAP
from latnak.exceptions import PreconditionError
from latnak.families.family import SFamily, subfamily, transpose_family
from latnak.homalg import (
    HomComplex,
    HomDims,
    ProjComplex,
    hom_dims,
    is_in_thick,
    is_iso,
    project_left,
    project_right,
    serre,
    stalk_projective,
    sub_serre,
)
from latnak.lattice import GridPoint, is_young

logger = logging.getLogger(__name__)

Case = tuple[str, Callable[[], bool]]


@dataclass
class AxiomResult:
    """
    Verdict for one axiom

    Attributes:
        axiom (str): Axiom label (e.g. "L2.1", "S3", "Y4")
        passed (bool): Whether every instance of the axiom holds
        checked (int): Number of instances evaluated before stopping
        witness (str | None): Description of the first failing instance
        skipped (bool): Whether the axiom was not evaluated because a prerequisite failed
    """

    axiom: str
    passed: bool
    checked: int = 0
    witness: str | None = None
    skipped: bool = False

    def __str__(self) -> str:
        if self.skipped:
            return f"{self.axiom}: skipped"
        result = f"{self.axiom}: {'pass' if self.passed else 'fail'} ({self.checked} checked)"
        if self.witness:
            result += f" [{self.witness}]"
        return result

    def to_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "passed": self.passed,
            "checked": self.checked,
            "witness": self.witness,
            "skipped": self.skipped,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AxiomResult":
        return cls(
            data["axiom"],
            bool(data["passed"]),
            int(data.get("checked", 0)),
            data.get("witness"),
            bool(data.get("skipped", False)),
        )


@dataclass
class AxiomReport:
    """
    Per-axiom verdicts for one family

    Attributes:
        subject (str): Name of the checked family
        results (list[AxiomResult]): One entry per axiom, in evaluation order
    """

    subject: str
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results if not r.skipped) and not any(r.skipped for r in self.results)

    def result(self, axiom: str) -> AxiomResult | None:
        for r in self.results:
            if r.axiom == axiom:
                return r
        return None

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.passed and not r.skipped]

    def extend(self, other: "AxiomReport") -> "AxiomReport":
        return AxiomReport(self.subject, self.results + other.results)

    def to_dict(self) -> dict:
        return {"subject": self.subject, "passed": self.passed, "results": [r.to_dict() for r in self.results]}

    @classmethod
    def from_dict(cls, data: dict) -> "AxiomReport":
        return cls(data["subject"], [AxiomResult.from_dict(r) for r in data.get("results", [])])


class FamilyHoms:
    """
    Memoized Hom dimensions and sub-Serre images for one family

    Args:
        fam (SFamily): The family
        verify (bool): Run the post-condition checks of every projection
        iso_cap (int): Largest degree-zero Hom space searched by the isomorphism test
        seed (int): Seed of the random combinations tried by the isomorphism test
    """

    def __init__(self, fam: SFamily, verify: bool = True, iso_cap: int = ISO_CAP, seed: int = 0):
        self.fam = fam
        self.verify = verify
        self.iso_cap = iso_cap
        self.seed = seed
        self._dims: dict[tuple[GridPoint, GridPoint], HomDims] = {}
        self._serre: dict[tuple[str, GridPoint], ProjComplex] = {}

    def dims(self, a: GridPoint, b: GridPoint) -> HomDims:
        if (a, b) not in self._dims:
            self._dims[(a, b)] = hom_dims(self.fam.members[a], self.fam.members[b])
        return self._dims[(a, b)]

    def _cached(self, kind: str, p: GridPoint, sequence: list[ProjComplex]) -> ProjComplex:
        key = (kind, p)
        if key not in self._serre:
            self._serre[key] = sub_serre(sequence, self.fam.members[p], self.verify)
        return self._serre[key]

    def row_serre(self, p: GridPoint) -> ProjComplex:
        """
        S_{⟨X_i⟩}(X_{i,j})
        """

        return self._cached("row", p, self.fam.row(p.i))

    def col_serre(self, p: GridPoint) -> ProjComplex:
        """
        S_{⟨X^j⟩}(X_{i,j})
        """

        return self._cached("col", p, self.fam.col(p.j))

    def total_serre(self, p: GridPoint) -> ProjComplex:
        """
        S_{⟨X_S⟩}(X_{i,j})
        """

        return self._cached("all", p, self.fam.sequence())

    def iso_case(self, label: str, left: Callable[[], ProjComplex], right: Callable[[], ProjComplex]) -> Case:
        return label, lambda: is_iso(left(), right(), self.iso_cap, self.seed)


def _run(axiom: str, cases: Iterable[Case]) -> AxiomResult:
    checked = 0
    for witness, test in cases:
        checked += 1
        if not test():
            logger.debug("%s fails at %s", axiom, witness)
            return AxiomResult(axiom, False, checked, witness)
    return AxiomResult(axiom, True, checked)


def _skipped(*axioms: str) -> list[AxiomResult]:
    return [AxiomResult(axiom, False, 0, "weak S-family axioms fail", skipped=True) for axiom in axioms]


def _hom_witness(a: GridPoint, b: GridPoint, dims: HomDims) -> str:
    n = min(dims)
    return f"Hom(X{a}, X{b}[{n}]) = {dims[n]}"


def _check_l1(fam: SFamily, homs: FamilyHoms) -> AxiomResult:
    return _run("L1", ((f"X{p} is not exceptional", lambda p=p: homs.dims(p, p) == {0: 1}) for p in fam.points))


def check_weak(fam: SFamily, homs: FamilyHoms | None = None) -> AxiomReport:
    """
    Check (L1) and (L2), the latter split into (L2.1) for rows and (L2.2) for columns

    Args:
        fam (SFamily): Family to check
        homs (FamilyHoms | None): Shared memo table

    Returns:
        AxiomReport: Verdicts for L1, L2.1 and L2.2
    """

    homs = homs or FamilyHoms(fam)
    l1 = _check_l1(fam, homs)

    witnesses: dict[str, str | None] = {"L2.1": None, "L2.2": None}
    checked = {"L2.1": 0, "L2.2": 0}
    for a in fam.points:
        allowed = fam.support.square(a.i, a.j)
        for b in fam.points:
            if b in allowed:
                continue
            axiom = "L2.1" if not a.i - 1 <= b.i <= a.i else "L2.2"
            if witnesses[axiom] is not None:
                continue
            checked[axiom] += 1
            dims = homs.dims(a, b)
            if dims:
                witnesses[axiom] = _hom_witness(a, b, dims)

    results = [l1] + [AxiomResult(axiom, witnesses[axiom] is None, checked[axiom], witnesses[axiom]) for axiom in witnesses]
    return AxiomReport(fam.name, results)


def check_family(fam: SFamily, homs: FamilyHoms | None = None) -> AxiomReport:
    """
    Check the S-family axioms (S1), (S2) and (S3) on top of the weak axioms

    (S1) S_{⟨X_i⟩}(X_{i,j}) ≅ X_{i,j-1}, (S2) S_{⟨X^j⟩}(X_{i,j}) ≅ X_{i-1,j} and
    (S3) S_{⟨X_S⟩}(X_{i,j}) ≅ X_{i-1,j-1}, whenever both indices lie in S.
    """

    homs = homs or FamilyHoms(fam)
    report = check_weak(fam, homs)
    if not report.passed:
        return AxiomReport(fam.name, report.results + _skipped("S1", "S2", "S3"))

    S, X = fam.support, fam.members

    def adjacent(di: int, dj: int) -> Iterator[tuple[GridPoint, GridPoint]]:
        for p in fam.points:
            q = GridPoint(p.i - di, p.j - dj)
            if q in S:
                yield p, q

    s1 = _run(
        "S1",
        (homs.iso_case(f"S_row(X{p}) vs X{q}", lambda p=p: homs.row_serre(p), lambda q=q: X[q]) for p, q in adjacent(0, 1)),
    )
    s2 = _run(
        "S2",
        (homs.iso_case(f"S_col(X{p}) vs X{q}", lambda p=p: homs.col_serre(p), lambda q=q: X[q]) for p, q in adjacent(1, 0)),
    )
    s3 = _run(
        "S3",
        (homs.iso_case(f"S_S(X{p}) vs X{q}", lambda p=p: homs.total_serre(p), lambda q=q: X[q]) for p, q in adjacent(1, 1)),
    )

    result = AxiomReport(fam.name, report.results + [s1, s2, s3])
    logger.info("S-family check of %s: %s", fam.name, "pass" if result.passed else "fail")
    return result


def check_prime_conditions(fam: SFamily, homs: FamilyHoms | None = None) -> AxiomReport:
    """
    Check (S1') F_{⟨X^{j-1}⟩}(X_{i,j}) ≅ X_{i,j-1} and (S2') F_{⟨X_{i-1}⟩}(X_{i,j}) ≅ X_{i-1,j}
    """

    homs = homs or FamilyHoms(fam)
    report = check_weak(fam, homs)
    if not report.passed:
        return AxiomReport(fam.name, report.results + _skipped("S1'", "S2'"))

    S, X, verify = fam.support, fam.members, homs.verify

    s1 = _run(
        "S1'",
        (
            homs.iso_case(
                f"F_col{p.j - 1}(X{p}) vs X{q}",
                lambda p=p: project_left(fam.col(p.j - 1), X[p], verify),
                lambda q=q: X[q],
            )
            for p in fam.points
            if (q := GridPoint(p.i, p.j - 1)) in S
        ),
    )
    s2 = _run(
        "S2'",
        (
            homs.iso_case(
                f"F_row{p.i - 1}(X{p}) vs X{q}",
                lambda p=p: project_left(fam.row(p.i - 1), X[p], verify),
                lambda q=q: X[q],
            )
            for p in fam.points
            if (q := GridPoint(p.i - 1, p.j)) in S
        ),
    )
    return AxiomReport(fam.name, report.results + [s1, s2])


def is_full(fam: SFamily) -> bool:
    """
    Whether every indecomposable projective lies in the thick closure of the members
    """

    sequence = fam.sequence()
    for v in fam.algebra.vertices:
        if not is_in_thick(sequence, stalk_projective(fam.algebra, v)):
            logger.debug("%s: P(%s) is not in the thick closure", fam.name, v)
            return False
    return True


def check_Y(fam: SFamily, homs: FamilyHoms | None = None) -> AxiomReport:
    """
    Check the characterization of full Young-diagram families

    (Y1) rows are semiorthogonal and together generate, (Y2) the first row is an exceptional
    sequence, (Y3) S_{⟨X_1⟩}(X_{1,j}) ≅ X_{1,j-1}, (Y4) S(X_{i,j}) ≅ S_{⟨X_{i-1}⟩}(X_{i-1,j}).

    Raises:
        PreconditionError: If the support is not a normalized Young diagram
    """

    if not is_young(fam.support):
        raise PreconditionError("check_Y", "support is not a normalized Young diagram", fam.support)

    homs = homs or FamilyHoms(fam)
    S, X = fam.support, fam.members
    l1 = _check_l1(fam, homs)

    def semiorthogonal() -> Iterator[Case]:
        for a in fam.points:
            for b in fam.points:
                if a.i < b.i:
                    yield f"Hom(X{a}, X{b}[*]) != 0", lambda a=a, b=b: not homs.dims(a, b)
        yield "the rows do not generate", lambda: is_full(fam)

    y1 = _run("Y1", semiorthogonal())

    first = S.row(1)
    y2 = _run(
        "Y2",
        (
            (f"Hom(X(1,{j}), X(1,{k})[*]) != 0", lambda j=j, k=k: not homs.dims(GridPoint(1, j), GridPoint(1, k)))
            for j in first
            for k in first
            if j < k
        ),
    )
    y3 = _run(
        "Y3",
        (
            homs.iso_case(f"S_row1(X(1,{j})) vs X(1,{j - 1})", lambda j=j: homs.row_serre(GridPoint(1, j)), lambda j=j: X[GridPoint(1, j - 1)])
            for j in first
            if j > 1
        ),
    )
    y4 = _run(
        "Y4",
        (
            homs.iso_case(
                f"S(X{p}) vs S_row{p.i - 1}(X({p.i - 1},{p.j}))",
                lambda p=p: serre(X[p]),
                lambda p=p: homs.row_serre(GridPoint(p.i - 1, p.j)),
            )
            for p in fam.points
            if p.i > 1
        ),
    )

    result = AxiomReport(fam.name, [l1, y1, y2, y3, y4])
    logger.info("Young family check of %s: %s", fam.name, "pass" if result.passed else "fail")
    return result


def end_algebra_pattern(fam: SFamily, homs: FamilyHoms | None = None) -> IntMatrix:
    """
    The matrix of dim Hom(X_a, X_b) with rows indexed by b and columns by a
    """

    homs = homs or FamilyHoms(fam)
    points = fam.points
    entries = tuple(tuple(homs.dims(a, b).get(0, 0) for a in points) for b in points)
    return IntMatrix(points, entries)


def _composite_is_nonzero(top: ProjComplex, middle: ProjComplex, bottom: ProjComplex) -> bool:
    first = HomComplex(top, middle)
    second = HomComplex(middle, bottom)
    u, v = first.cohomology_basis(0), second.cohomology_basis(0)
    if len(u) != 1 or len(v) != 1:
        return False

    composite = second.chain_map(0, v[0]).compose(first.chain_map(0, u[0]))
    return not HomComplex(top, bottom).is_null_homotopic(composite)


def check_end_lattice(fam: SFamily, homs: FamilyHoms | None = None) -> AxiomReport:
    """
    Check that End(X_S) is the lattice algebra L(S) with X_S pretilting

    The Hom pattern must be the Cartan matrix of L(S) (so every nonzero Hom space is
    one-dimensional), no shifted Hom may survive, and along both paths of every square the
    composite of the generators must reach the corner nonzero. Up to rescaling of the
    generators this presents L(S).
    """

    homs = homs or FamilyHoms(fam)
    X, S = fam.members, fam.support

    expected = cartan_lattice(S)
    actual = end_algebra_pattern(fam, homs)
    mismatches = [
        (a, b)
        for x, a in enumerate(S.ordered)
        for y, b in enumerate(S.ordered)
        if expected[y, x] != actual[y, x]
    ]
    pattern = AxiomResult(
        "pattern",
        not mismatches,
        len(S) ** 2,
        f"dim Hom(X{mismatches[0][0]}, X{mismatches[0][1]}) = {actual.entry(mismatches[0][1], mismatches[0][0])}"
        if mismatches
        else None,
    )

    pretilting = _run(
        "pretilting",
        (
            (f"Hom(X{a}, X{b}[n]) != 0 for some n != 0", lambda a=a, b=b: set(homs.dims(a, b)) <= {0})
            for a in fam.points
            for b in fam.points
        ),
    )

    def squares() -> Iterator[Case]:
        for p in fam.points:
            corner = GridPoint(p.i - 1, p.j - 1)
            if corner not in S:
                continue
            for middle in (GridPoint(p.i, p.j - 1), GridPoint(p.i - 1, p.j)):
                if middle in S:
                    yield (
                        f"X{p} -> X{middle} -> X{corner} vanishes",
                        lambda p=p, m=middle, c=corner: _composite_is_nonzero(X[p], X[m], X[c]),
                    )

    commuting = _run("squares", squares())
    return AxiomReport(fam.name, [pattern, pretilting, commuting])


def end_is_lattice(fam: SFamily, homs: FamilyHoms | None = None) -> bool:
    return check_end_lattice(fam, homs).passed


def _row_cartan(columns: list[int]) -> IntMatrix:
    blocks: list[list[int]] = []
    for j in columns:
        if blocks and blocks[-1][-1] == j - 1:
            blocks[-1].append(j)
        else:
            blocks.append([j])

    entries = {(b, a): 0 for a in columns for b in columns}
    for block in blocks:
        C = cartan(nn(block))
        for y, b in enumerate(C.labels):
            for x, a in enumerate(C.columns):
                entries[(b, a)] = C[y, x]
    return IntMatrix(tuple(columns), tuple(tuple(entries[(b, a)] for a in columns) for b in columns))


def check_row_lemma(fam: SFamily, homs: FamilyHoms | None = None) -> AxiomReport:
    """
    Every row X_i is pretilting with End(X_i) ≅ N(S_i)
    """

    homs = homs or FamilyHoms(fam)

    def rows() -> Iterator[Case]:
        for i in fam.support.rows():
            columns = fam.support.row(i)
            expected = _row_cartan(columns)

            def holds(i: int = i, columns: list[int] = columns, expected: IntMatrix = expected) -> bool:
                for x, a in enumerate(columns):
                    for y, b in enumerate(columns):
                        dims = homs.dims(GridPoint(i, a), GridPoint(i, b))
                        if set(dims) - {0} or dims.get(0, 0) != expected[y, x]:
                            return False
                return True

            yield f"End(X_{i}) is not N(S_{i})", holds

    return AxiomReport(fam.name, [_run("row lemma", rows())])


def check_gluing(fam: SFamily, k: int, transposed: bool = False) -> AxiomReport:
    """
    Gluing: under (L2.1), the family is an S-family iff both X_{<=k} and X_{>=k} are

    With ``transposed`` the columns are split instead, under (L2.2).
    """

    if transposed:
        report = check_gluing(transpose_family(fam), k)
        return AxiomReport(fam.name, [AxiomResult(f"{r.axiom}ᵗ", r.passed, r.checked, r.witness, r.skipped) for r in report.results])

    weak = check_weak(fam)
    premise = weak.result("L2.1") or AxiomResult("L2.1", False)
    if not premise.passed:
        return AxiomReport(fam.name, [premise, AxiomResult("gluing", False, 0, "L2.1 fails", skipped=True)])

    whole = check_family(fam).passed
    lower = check_family(subfamily(fam, rows=(None, k))).passed
    upper = check_family(subfamily(fam, rows=(k, None))).passed
    holds = whole == (lower and upper)
    witness = None if holds else f"whole={whole}, rows<={k}: {lower}, rows>={k}: {upper}"
    return AxiomReport(fam.name, [premise, AxiomResult("gluing", holds, 1, witness)])


def check_lss1(fam: SFamily, homs: FamilyHoms | None = None) -> AxiomReport:
    """
    S_{⟨X_S⟩}(X_{i,j}) ≅ S_{⟨X_{i-1}⟩}(X_{i-1,j}) whenever S_i is contained in S_{i-1}
    """

    homs = homs or FamilyHoms(fam)
    S = fam.support

    cases = (
        homs.iso_case(
            f"S_S(X{p}) vs S_row{p.i - 1}(X({p.i - 1},{p.j}))",
            lambda p=p: homs.total_serre(p),
            lambda p=p: homs.row_serre(GridPoint(p.i - 1, p.j)),
        )
        for p in fam.points
        if S.row(p.i - 1) and set(S.row(p.i)) <= set(S.row(p.i - 1))
    )
    return AxiomReport(fam.name, [_run("LSS1", cases)])


def check_triangle_lemma(fam: SFamily, homs: FamilyHoms | None = None) -> AxiomReport:
    """
    T_{⟨X_{i,>=j}⟩}(X_{i,j-1}) ≅ S_{⟨X_{i, S_i minus {j-1}}⟩}(X_{i,j}) whenever (i,j), (i,j-1) lie in S
    """

    homs = homs or FamilyHoms(fam)
    S, X, verify = fam.support, fam.members, homs.verify

    def cases() -> Iterator[Case]:
        for p in fam.points:
            q = GridPoint(p.i, p.j - 1)
            if q not in S:
                continue
            tail = [X[GridPoint(p.i, j)] for j in S.row(p.i) if j >= p.j]
            rest = [X[GridPoint(p.i, j)] for j in S.row(p.i) if j != q.j]
            yield homs.iso_case(
                f"T(X{q}) vs S(X{p})",
                lambda tail=tail, q=q: project_right(tail, X[q], verify),
                lambda rest=rest, p=p: sub_serre(rest, X[p], verify),
            )

    return AxiomReport(fam.name, [_run("triangle", cases())])
