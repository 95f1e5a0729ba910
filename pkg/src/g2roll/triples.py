"""Null triples, the apartment basis, and explicit elements of split G2.

A null triple ``(x, y, z)`` consists of pairwise orthogonal nonzero null
imaginary split octonions with ``(x cross y) . z = 1/2``.  The seven vectors

    x, y, z, x cross y, y cross z, z cross x, w = 2 (x cross y) cross z

form a basis of I, and the linear map sending the basis of one triple to
the basis of another preserves dot and cross.  That map is the unique
automorphism carrying one triple to the other.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import (BASIS, HALF, SIGNATURE, Q, Vec7, cross, dot, lincomb,
                      vadd, vscale, vsub, vzero)
from .errors import (DifferentOrbits, InvalidTriple, NotInG2, NotNull,
                     NotTwoRolls, WrongDistance, ZeroVector)
from .incidence import (OrbitClass, PCPoint, annihilator, classify_pair,
                        point_from_vector, roll_distance)
from .linalg import (columns_to_matrix, det, identity, inverse, mat_vec,
                     matmul, nullspace, rank, solve_particular, transpose)
from .scalars import Rat


@dataclass(frozen=True)
class NullTriple:
    x: Vec7
    y: Vec7
    z: Vec7

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def rotated(self) -> "NullTriple":
        """The cyclic rotation ``(y, z, x)``, again a null triple."""
        return NullTriple(self.y, self.z, self.x)


def triple_failures(x, y, z) -> List[str]:
    """Names of the null-triple conditions that fail (empty when valid)."""
    failures = []
    for name, v in (("x", x), ("y", y), ("z", z)):
        if vzero(v):
            failures.append(f"nonzero:{name}")
        elif Q(v) != 0:
            failures.append(f"nullity:{name}")
    for name, u, v in (("xy", x, y), ("yz", y, z), ("zx", z, x)):
        if dot(u, v) != 0:
            failures.append(f"orthogonality:{name}")
    if dot(cross(x, y), z) != HALF:
        failures.append("normalization")
    return failures


def validate_triple(x, y, z) -> NullTriple:
    x, y, z = tuple(x), tuple(y), tuple(z)
    failures = triple_failures(x, y, z)
    if failures:
        raise InvalidTriple("not a null triple: " + ", ".join(failures), failures)
    return NullTriple(x, y, z)


def dot_row(u: Sequence) -> List:
    return [s * c for s, c in zip(SIGNATURE, u)]


def _require_null(v, name="vector"):
    if vzero(v):
        raise ZeroVector(f"{name} is zero")
    if Q(v) != 0:
        raise NotNull(f"{name} is not null")


def complete_pair(x, y, offset: Optional[Sequence] = None) -> NullTriple:
    """Extend a pair two rolls apart to a null triple ``(x, y, z)``.

    A particular solution ``z1`` of ``z.x = 0, z.y = 0, (x cross y).z = 1/2``
    is corrected to ``z1 - Q(z1) (x cross y)``, which is null because
    ``x cross y`` is null, orthogonal to x and y, and pairs to 1/2 with z1.
    ``offset``, if given, must solve the homogeneous system; it is added to
    ``z1`` and lets callers reach other completions.
    """
    x, y = tuple(x), tuple(y)
    _require_null(x, "x")
    _require_null(y, "y")
    if roll_distance(x, y) != 2:
        raise NotTwoRolls("x and y are not two rolls apart", distance=roll_distance(x, y))
    c = cross(x, y)
    a = [dot_row(x), dot_row(y), dot_row(c)]
    z1 = solve_particular(a, [0, 0, HALF])
    if offset is not None:
        if any(dot(r, offset) != 0 for r in (x, y, c)):
            raise ValueError("offset does not solve the homogeneous system")
        z1 = vadd(z1, offset)
    z = vsub(z1, vscale(Q(z1), c))
    return validate_triple(x, y, z)


def _null_candidates() -> List[Vec7]:
    """Fixed scan order: ``e_a +- e_(a+4)`` first, then all ``e_a +- e_b``."""
    def combo(a, b, s):
        v = [Rat(0)] * 7
        v[a] = Rat(1)
        v[b] = Rat(s)
        return tuple(v)

    diagonal = [combo(a, a + 4, s) for a in range(3) for s in (1, -1)]
    rest = [combo(a, b, s) for a in range(3) for b in range(3, 7) for s in (1, -1)]
    return diagonal + [v for v in rest if v not in diagonal]


NULL_CANDIDATES: Tuple[Vec7, ...] = tuple(_null_candidates())


def _two_rolls_from(x) -> Vec7:
    for cand in NULL_CANDIDATES:
        if roll_distance(x, cand) == 2:
            return cand
    # constructive fallback: step to m in Ann_x, then to Ann_m off the line <x, m>
    ann_x = annihilator(x)
    m = next(v for v in ann_x if rank([x, v]) == 2)
    for v in annihilator(m):
        if rank([x, m, v]) == 3 and roll_distance(x, v) == 2:
            return v
    raise ArithmeticError("no point two rolls away found")


def _parallel_factor(u, w):
    """The scalar ``s`` with ``u = s w``; raises if none exists."""
    k = next(i for i, c in enumerate(w) if c != 0)
    s = u[k] / w[k]
    if not vzero(vsub(u, vscale(s, w))):
        raise ArithmeticError("vectors are not parallel")
    return s


@dataclass(frozen=True)
class ExtensionResult:
    triple: NullTriple
    scale: object = Rat(1)


def extend_config(case: int, first, second=None) -> ExtensionResult:
    """Build a null triple realizing a relation between given points.

    case 0: ``first = x``; triple starting with x.
    case 1: ``first = w, second = x`` one roll apart; triple with ``x cross y = w``.
    case 2: ``first = x, second = y`` two rolls apart; triple ``(x, y, z)``.
    case 3: ``first = w, second = x`` three rolls apart; triple with
            ``<y cross z> = <w>``.

    ``scale`` is the factor applied to the auxiliary vector (y in case 1,
    z in case 3) to meet the exact relation.
    """
    first = tuple(first)
    _require_null(first, "first vector")
    if case == 0:
        x = first
        return ExtensionResult(complete_pair(x, _two_rolls_from(x)))
    if second is None:
        raise ValueError(f"case {case} needs two vectors")
    second = tuple(second)
    _require_null(second, "second vector")
    if case == 2:
        return ExtensionResult(complete_pair(first, second))
    w, x = first, second
    d = roll_distance(w, x)
    if case == 1:
        if d != 1:
            raise WrongDistance(f"case 1 needs points one roll apart, got {d}", distance=d)
        y0 = next(v for v in annihilator(w) if rank([w, x, v]) == 3)
        lam = _parallel_factor(cross(x, y0), w)
        scale = 1 / lam
        y = vscale(scale, y0)
        triple = complete_pair(x, y)
        if cross(triple.x, triple.y) != w:
            raise ArithmeticError("case 1 relation failed")
        return ExtensionResult(triple, scale)
    if case == 3:
        if d != 3:
            raise WrongDistance(f"case 3 needs points three rolls apart, got {d}", distance=d)
        ann = annihilator(w)
        kernel = nullspace([[dot(v, x) for v in ann]], 3)
        y = lincomb(kernel[0], ann)
        z0 = lincomb(kernel[1], ann)
        s = dot(cross(x, y), z0)
        scale = 1 / (2 * s)
        triple = validate_triple(x, y, vscale(scale, z0))
        if point_from_vector(cross(triple.y, triple.z)) != point_from_vector(w):
            raise ArithmeticError("case 3 relation failed")
        return ExtensionResult(triple, scale)
    raise ValueError(f"unknown extension case {case!r}")


APARTMENT_LABELS = ("x", "y", "z", "x*y", "y*z", "z*x", "w")


@dataclass(frozen=True)
class ApartmentBasis:
    vectors: Tuple[Vec7, ...]

    def __getitem__(self, label: str) -> Vec7:
        return self.vectors[APARTMENT_LABELS.index(label)]

    def as_dict(self) -> Dict[str, Vec7]:
        return dict(zip(APARTMENT_LABELS, self.vectors))

    def matrix(self):
        """Columns are the basis vectors."""
        return columns_to_matrix(self.vectors)

    def determinant(self):
        return det(self.matrix())


def apartment_basis(t: NullTriple) -> ApartmentBasis:
    x, y, z = t
    xy = cross(x, y)
    w = vscale(2, cross(xy, z))
    b = ApartmentBasis((x, y, z, xy, cross(y, z), cross(z, x), w))
    if b.determinant() == 0:
        raise ArithmeticError("apartment vectors are dependent")
    return b


def hexagon_check(t: NullTriple) -> List[dict]:
    """Check every dot/cross rule of the hexagon table; one entry per rule family."""
    b = apartment_basis(t)
    x, y, z, xy, yz, zx, w = b.vectors
    # outer cycle, following the arrows; vertex i is opposite vertex i + 3
    outer = [x, xy, y, yz, z, zx]
    names = ["x", "x*y", "y", "y*z", "z", "z*x"]
    zero = tuple(Rat(0) for _ in range(7))
    report = []

    def rule(name, violations):
        report.append({"rule": name, "status": "pass" if not violations else "fail",
                       "violations": violations})

    rule("outer vertices null", [n for n, v in zip(names, outer) if Q(v) != 0])
    rule("opposite pairs dot 1/2",
         [f"{names[i]}.{names[i + 3]}" for i in range(3) if dot(outer[i], outer[i + 3]) != HALF])
    rule("non-opposite outer pairs orthogonal",
         [f"{names[i]}.{names[j]}" for i in range(6) for j in range(i + 1, 6)
          if j - i != 3 and dot(outer[i], outer[j]) != 0])
    mid = [f"w.{n}" for n, v in zip(names, outer) if dot(w, v) != 0]
    if dot(w, w) != -1:
        mid.append("w.w")
    rule("middle orthogonal to outer, self-dot -1", mid)
    rule("adjacent cross zero",
         [f"{names[i]}x{names[(i + 1) % 6]}" for i in range(6)
          if cross(outer[i], outer[(i + 1) % 6]) != zero])
    rule("skip-one cross gives vertex between",
         [f"{names[i]}x{names[(i + 2) % 6]}" for i in range(6)
          if cross(outer[i], outer[(i + 2) % 6]) != outer[(i + 1) % 6]])
    half_w = vscale(HALF, w)
    rule("opposite cross gives half middle",
         [f"{names[i]}x{names[(i + 3) % 6]}" for i in (1, 3, 5)
          if cross(outer[i], outer[(i + 3) % 6]) != half_w])
    # arrows run from the middle to x, y, z and into the middle from x*y, y*z, z*x
    viol = [f"wx{names[i]}" for i in (0, 2, 4) if cross(w, outer[i]) != outer[i]]
    viol += [f"{names[i]}xw" for i in (1, 3, 5) if cross(outer[i], w) != outer[i]]
    rule("middle cross outer along arrow", viol)
    return report


GRAM = [[Rat(s) if i == j else Rat(0) for j, s in enumerate(SIGNATURE)]
        for i in range(7)]


def g2_failures(matrix) -> List[str]:
    """Conditions for membership in the automorphism group that fail."""
    failures = []
    mt = transpose(matrix)
    if matmul(matmul(mt, GRAM), matrix) != GRAM:
        failures.append("dot")
    cols = mt
    for i in range(7):
        for j in range(i + 1, 7):
            if mat_vec(matrix, cross(BASIS[i], BASIS[j])) != cross(cols[i], cols[j]):
                failures.append(f"cross:e{i + 1},e{j + 1}")
    return failures


@dataclass(frozen=True, eq=False)
class G2Element:
    """An exact 7x7 matrix preserving dot and cross on I."""

    matrix: Tuple[Tuple[object, ...], ...]
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        m = tuple(tuple(r) for r in self.matrix)
        if len(m) != 7 or any(len(r) != 7 for r in m):
            raise ValueError("G2 element must be 7x7")
        object.__setattr__(self, "matrix", m)
        if self.check:
            failures = g2_failures(m)
            if failures:
                raise NotInG2("matrix does not preserve " + ", ".join(failures),
                              failures=failures)

    def __eq__(self, other):
        return isinstance(other, G2Element) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __matmul__(self, other: "G2Element") -> "G2Element":
        return G2Element(matmul(self.matrix, other.matrix), check=False)

    def __call__(self, v):
        if isinstance(v, PCPoint):
            return point_from_vector(mat_vec(self.matrix, v.rep))
        return mat_vec(self.matrix, v)

    def apply_triple(self, t: NullTriple) -> NullTriple:
        return NullTriple(self(t.x), self(t.y), self(t.z))

    def inverse(self) -> "G2Element":
        return G2Element(inverse(self.matrix), check=False)

    def __pow__(self, n: int) -> "G2Element":
        if n < 0:
            return self.inverse() ** (-n)
        out = G2Element.identity()
        for _ in range(n):
            out = out @ self
        return out

    @staticmethod
    def identity() -> "G2Element":
        return G2Element(identity(7), check=False)


def g2_from_triples(t: NullTriple, t2: NullTriple) -> G2Element:
    """The unique automorphism with ``g(t) = t2``: ``B2 B1^-1`` on apartment bases."""
    b1 = apartment_basis(t).matrix()
    b2 = apartment_basis(t2).matrix()
    return G2Element(matmul(b2, inverse(b1)))


def _frame_triple(a: PCPoint, b: PCPoint, cls: OrbitClass) -> NullTriple:
    """A null triple encoding the pair ``(a, b)`` for its orbit class."""
    if cls is OrbitClass.X0:
        return extend_config(0, a.rep).triple
    if cls is OrbitClass.X1:
        return extend_config(1, b.rep, a.rep).triple
    if cls is OrbitClass.X2:
        return complete_pair(a.rep, b.rep)
    return extend_config(3, b.rep, a.rep).triple


def pair_transporter(pair_a, pair_b) -> G2Element:
    """An automorphism carrying ``pair_a`` to ``pair_b`` as points."""
    a1, b1 = (point_from_vector(getattr(p, "rep", p)) for p in pair_a)
    a2, b2 = (point_from_vector(getattr(p, "rep", p)) for p in pair_b)
    cls1, cls2 = classify_pair(a1, b1), classify_pair(a2, b2)
    if cls1 is not cls2:
        raise DifferentOrbits(f"pairs lie in different orbits {cls1.value} and {cls2.value}",
                              orbits=[cls1.value, cls2.value])
    g = g2_from_triples(_frame_triple(a1, b1, cls1), _frame_triple(a2, b2, cls2))
    if g(a1) != a2 or g(b1) != b2:
        raise ArithmeticError("transporter does not map the pair")
    return g


STANDARD_TRIPLE = NullTriple(
    (Rat(1), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)),
    (Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)),
    (Rat(0), Rat(0), Rat(1, 8), Rat(0), Rat(0), Rat(0), Rat(1, 8)),
)
