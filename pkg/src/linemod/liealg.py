"""Bracket algebras given by structure constants.

Covers ordinary Lie algebras, Lie superalgebras and group-graded color Lie
algebras of dimension three (plus the eight-dimensional super example used
for the non-domain certificate).  Subalgebras here are subspaces closed
under the bracket; admissibility of a linear functional means that it
defines a one-dimensional module over the subalgebra, and is decided by
two independent routes that must agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from random import Random

from .errors import (
    AdmissibilityError,
    RankDeficientError,
    RouteDisagreementError,
    SubalgebraFormError,
)
from .hilbert import filtered_cyclic_dims
from .linalg import coords_in_span, dense_nullspace, dense_rank, in_span
from .ncalg import NcPoly
from .rewrite import Presentation, RewriteSystem, complete, normal_form


@dataclass(frozen=True)
class BracketTable:
    """Structure constants of a bracket algebra.

    ``table[i][j]`` holds the coordinates of the bracket of basis vectors
    i and j.  ``signs[i][j]`` is +1 when the associated enveloping relation
    is commutator shaped (b_i b_j - b_j b_i - <b_i,b_j>) and -1 when it is
    anticommutator shaped; it is determined by the grading, never stored as
    an independent commutation factor.  ``enveloping`` is the inhomogeneous
    enveloping presentation on the same ordered basis names.
    """

    name: str
    kind: str                      # "lie" | "super" | "color"
    basis_names: tuple
    table: tuple
    signs: tuple
    enveloping: Presentation
    grading_group: str | None = None
    labels: tuple | None = None

    @property
    def dimension(self) -> int:
        return len(self.basis_names)

    def bracket_relation(self, i: int, j: int, homogenizer: int | None = None) -> NcPoly:
        """The free-algebra element b_i b_j - sign b_j b_i - <b_i,b_j> (times
        the homogenizing generator when ``homogenizer`` is given)."""
        rel = NcPoly.monomial((i, j)) - NcPoly.monomial((j, i)).scale(self.signs[i][j])
        for k, c in enumerate(self.table[i][j]):
            if c:
                word = (k,) if homogenizer is None else (k, homogenizer)
                rel = rel - NcPoly.monomial(word, c)
        return rel


def bracket(x, y, T: BracketTable) -> tuple:
    """Bilinear extension of the structure-constant table."""
    n = T.dimension
    out = [Fraction(0)] * n
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            c = x[i] * y[j]
            if not c:
                continue
            for k, v in enumerate(T.table[i][j]):
                if v:
                    out[k] += c * v
    return tuple(out)


@dataclass(frozen=True)
class SubalgebraSpec:
    """A two-dimensional subspace given by two coefficient vectors."""

    v1: tuple
    v2: tuple

    def __post_init__(self):
        object.__setattr__(self, "v1", tuple(Fraction(c) for c in self.v1))
        object.__setattr__(self, "v2", tuple(Fraction(c) for c in self.v2))

    def rank(self) -> int:
        return dense_rank([self.v1, self.v2])

    def require_rank2(self):
        if self.rank() != 2:
            raise RankDeficientError("subspace basis is rank deficient")

    def basis(self) -> tuple:
        return (self.v1, self.v2)


@dataclass(frozen=True)
class Functional:
    """Values of a linear functional on the two basis vectors of a
    SubalgebraSpec."""

    on_v1: Fraction
    on_v2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "on_v1", Fraction(self.on_v1))
        object.__setattr__(self, "on_v2", Fraction(self.on_v2))

    def values(self) -> tuple:
        return (self.on_v1, self.on_v2)


def is_subalgebra(S: SubalgebraSpec, T: BracketTable) -> bool:
    """Closure under the bracket, tested on all four ordered basis pairs."""
    S.require_rank2()
    base = [S.v1, S.v2]
    for x in base:
        for y in base:
            if not in_span(bracket(x, y, T), base):
                return False
    return True


def is_graded_subspace(S: SubalgebraSpec, labels) -> bool:
    """Whether S is the sum of its intersections with the homogeneous
    components of the grading with the given per-coordinate labels."""
    S.require_rank2()
    n = len(S.v1)
    total = 0
    for lab in sorted(set(labels)):
        outside = [i for i in range(n) if labels[i] != lab]
        if not outside:
            total += 2
            continue
        # dim of S intersected with the component: solutions (x, y) of
        # x v1 + y v2 = 0 on the coordinates outside the component
        rows = [(S.v1[i], S.v2[i]) for i in outside]
        total += 2 - dense_rank(rows)
    return total == 2


# ----------------------------------------------------------------------
# canonical forms of classified subalgebras
# ----------------------------------------------------------------------


def _combo(S: SubalgebraSpec, coeffs) -> tuple:
    x, y = coeffs
    return tuple(x * a + y * b for a, b in zip(S.v1, S.v2))


def sl11_form(S: SubalgebraSpec, T: BracketTable):
    """Canonicalize S to the shape span(h, alpha e + beta f).

    Returns ((alpha, beta), C) where C is the 2x2 matrix expressing the
    canonical basis over (v1, v2); raises SubalgebraFormError when S is not
    of that shape.  Basis order of the ambient algebra is (e, f, h).
    """
    S.require_rank2()
    # combination x v1 + y v2 with zero e and f coordinates
    rows = [(S.v1[0], S.v2[0]), (S.v1[1], S.v2[1])]
    null = dense_nullspace(rows, 2)
    if len(null) != 1:
        raise SubalgebraFormError("subspace does not contain the even basis vector")
    x, y = null[0]
    u1 = _combo(S, (x, y))
    if not u1[2]:
        raise SubalgebraFormError("subspace does not contain the even basis vector")
    c0 = (x / u1[2], y / u1[2])
    # complement with zero h coordinate; v1 is independent of u1 unless the
    # even combination used v1 alone
    w, wc = (S.v1, (Fraction(1), Fraction(0)))
    if y == 0:
        w, wc = (S.v2, (Fraction(0), Fraction(1)))
    c1 = (wc[0] - w[2] * c0[0], wc[1] - w[2] * c0[1])
    u2 = _combo(S, c1)
    alpha, beta = u2[0], u2[1]
    if u2[2] or (not alpha and not beta):
        raise SubalgebraFormError("could not split off an odd complement")
    return (alpha, beta), (c0, c1)


def color_form(S: SubalgebraSpec, T: BracketTable):
    """Canonicalize S to the shape span(a_i, a_j + mu a_k) with mu = +-1.

    Returns ((i, j, k, mu), C) with j < k; raises SubalgebraFormError when
    S is not of that shape.
    """
    S.require_rank2()
    base = [S.v1, S.v2]
    for i in range(3):
        unit = tuple(Fraction(1 if m == i else 0) for m in range(3))
        coeffs = coords_in_span(unit, base)
        if coeffs is None:
            continue
        j, k = [m for m in range(3) if m != i]
        null = dense_nullspace([(S.v1[i], S.v2[i])], 2)
        if len(null) != 1:
            raise SubalgebraFormError("no one-dimensional complement to a_i")
        u2 = _combo(S, null[0])
        if not u2[j]:
            raise SubalgebraFormError("complement is a multiple of a single basis vector")
        mu = u2[k] / u2[j]
        if mu not in (1, -1):
            raise SubalgebraFormError(f"complement slope {mu} is not +-1")
        c1 = (null[0][0] / u2[j], null[0][1] / u2[j])
        return (i, j, k, mu), (tuple(coeffs), c1)
    raise SubalgebraFormError("subspace contains no grading basis vector")


# ----------------------------------------------------------------------
# admissible functionals
# ----------------------------------------------------------------------


def closed_form_admissible(S: SubalgebraSpec, phi: Functional, T: BracketTable):
    """Per-family closed condition.  Returns (bool, reason string)."""
    if T.kind == "super":
        (alpha, beta), C = sl11_form(S, T)
        lam = C[0][0] * phi.on_v1 + C[0][1] * phi.on_v2
        gamma = C[1][0] * phi.on_v1 + C[1][1] * phi.on_v2
        if gamma * gamma == alpha * beta * lam:
            return True, ""
        return False, (
            f"phi(alpha*e+beta*f)^2 = {gamma * gamma} differs from "
            f"alpha*beta*phi(h) = {alpha * beta * lam}"
        )
    if T.kind == "color":
        (i, j, k, mu), C = color_form(S, T)
        val_i = C[0][0] * phi.on_v1 + C[0][1] * phi.on_v2
        val_w = C[1][0] * phi.on_v1 + C[1][1] * phi.on_v2
        if val_w == 0 or 2 * val_i == mu:
            return True, ""
        return False, (
            f"phi(a_j + mu a_k) = {val_w} is nonzero and phi(a_i) = {val_i} "
            f"differs from mu/2 = {Fraction(mu, 2)}"
        )
    if T.kind == "lie":
        if not is_subalgebra(S, T):
            raise SubalgebraFormError("subspace is not closed under the bracket")
        w = bracket(S.v1, S.v2, T)
        coeffs = coords_in_span(w, [S.v1, S.v2])
        value = coeffs[0] * phi.on_v1 + coeffs[1] * phi.on_v2
        if value == 0:
            return True, ""
        return False, f"phi does not vanish on the derived subalgebra: phi([v1,v2]) = {value}"
    raise ValueError(f"unknown bracket kind {T.kind!r}")


def shift_generators(S: SubalgebraSpec, phi: Functional, T: BracketTable) -> tuple:
    """The left-ideal generators x - phi(x) over the enveloping alphabet."""
    out = []
    for vec, value in zip(S.basis(), phi.values()):
        poly = NcPoly({(i,): c for i, c in enumerate(vec) if c})
        poly = poly - NcPoly.one().scale(value)
        out.append(poly)
    return tuple(out)


def properness_admissible(S: SubalgebraSpec, phi: Functional, T: BracketTable,
                          max_degree: int = 4) -> bool:
    """Bounded-degree route: the cyclic module U/(U {x - phi(x)}) is nonzero,
    i.e. the identity is not spanned by the filtered left ideal."""
    dims = filtered_cyclic_dims(T.enveloping, shift_generators(S, phi, T), max_degree)
    return dims[0] == 1


def admissible_functional(S: SubalgebraSpec, phi: Functional, T: BracketTable,
                          max_degree: int = 4) -> bool:
    """Whether phi defines a one-dimensional S-module, by both routes.

    The closed-form and bounded-degree answers are always both computed; a
    disagreement raises RouteDisagreementError.
    """
    closed, _ = closed_form_admissible(S, phi, T)
    proper = properness_admissible(S, phi, T, max_degree)
    if closed != proper:
        raise RouteDisagreementError(
            f"closed form says {closed} but bounded-degree properness says {proper} "
            f"for {T.name} subspace {S.v1}, {S.v2} with phi {phi.values()}"
        )
    return closed


def require_admissible(S: SubalgebraSpec, phi: Functional, T: BracketTable):
    ok, reason = closed_form_admissible(S, phi, T)
    if not ok:
        raise AdmissibilityError(reason)


# ----------------------------------------------------------------------
# classification of two-dimensional subalgebras
# ----------------------------------------------------------------------


@dataclass
class ClassificationReport:
    algebra: str
    family: str
    members: list                  # dicts: params, closed, graded
    sufficiency_pass: bool
    samples: int
    seed: int
    closed_sample_count: int
    counterexamples: list
    completeness_pass: bool = field(init=False)

    def __post_init__(self):
        self.completeness_pass = not self.counterexamples


def _small_fraction(rng: Random) -> Fraction:
    return Fraction(rng.randint(-20, 20), rng.randint(1, 20))


def _random_rank2(rng: Random) -> SubalgebraSpec:
    """Random rank-2 subspace of k^3: echelon chart plus a random basis mix.

    All three echelon charts of the Grassmannian are covered, with most
    samples in the dense chart.
    """
    roll = rng.random()
    if roll < 0.80:
        rows = [(1, 0, _small_fraction(rng)), (0, 1, _small_fraction(rng))]
    elif roll < 0.97:
        rows = [(1, _small_fraction(rng), 0), (0, 0, 1)]
    else:
        rows = [(0, 1, 0), (0, 0, 1)]
    while True:
        a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
        if a * d - b * c != 0:
            break
    v1 = tuple(a * x + b * y for x, y in zip(*rows))
    v2 = tuple(c * x + d * y for x, y in zip(*rows))
    return SubalgebraSpec(v1, v2)


def family_member(S: SubalgebraSpec, T: BracketTable) -> bool:
    """Whether a closed subspace belongs to the classified family."""
    if T.kind == "super":
        try:
            sl11_form(S, T)
            return True
        except SubalgebraFormError:
            return False
    if T.kind == "color":
        try:
            color_form(S, T)
            return True
        except SubalgebraFormError:
            return False
    if T.kind == "lie":
        # solvable nonabelian plane: the derived subalgebra is one
        # dimensional and inside the plane (a Borel of sl2)
        w = bracket(S.v1, S.v2, T)
        return any(w) and in_span(w, [S.v1, S.v2])
    raise ValueError(f"unknown bracket kind {T.kind!r}")


def family_members(T: BracketTable) -> list:
    """Representative members of the classified family, including the
    degenerate parameter points."""
    if T.kind == "super":
        params = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 3), (-1, 5), (7, 2)]
        return [
            {"params": {"alpha": a, "beta": b},
             "spec": SubalgebraSpec((0, 0, 1), (a, b, 0))}
            for a, b in params
        ]
    if T.kind == "color":
        out = []
        for i in range(3):
            j, k = [m for m in range(3) if m != i]
            for mu in (1, -1):
                unit = tuple(1 if m == i else 0 for m in range(3))
                w = tuple((1 if m == j else (mu if m == k else 0)) for m in range(3))
                out.append({"params": {"i": i + 1, "mu": mu},
                            "spec": SubalgebraSpec(unit, w)})
        return out
    if T.kind == "lie":
        members = [
            {"params": {"borel": "upper"}, "spec": SubalgebraSpec((1, 0, 0), (0, 0, 1))},
            {"params": {"borel": "lower"}, "spec": SubalgebraSpec((0, 1, 0), (0, 0, 1))},
        ]
        for s in (1, -2, Fraction(1, 3)):
            members.append({
                "params": {"borel": f"s={s}"},
                "spec": SubalgebraSpec((1, -s * s, s), (0, -2 * s, 1)),
            })
        return members
    raise ValueError(f"unknown bracket kind {T.kind!r}")


def classify_2dim_subalgebras(T: BracketTable, samples: int = 10000, seed: int = 0) -> ClassificationReport:
    """Verify the claimed family and audit completeness on random subspaces.

    Sufficiency: every claimed member is closed.  Completeness: among
    ``samples`` random rank-2 subspaces, every closed one belongs to the
    family; offenders are reported as counterexamples.
    """
    descriptions = {
        "super": "span(h, alpha e + beta f) for (alpha : beta) in P^1",
        "color": "span(a_i, a_j + mu a_k), mu = +-1, six subspaces",
        "lie": "the Borel planes (solvable nonabelian)",
    }
    members = []
    sufficiency = True
    for m in family_members(T):
        closed = is_subalgebra(m["spec"], T)
        graded = is_graded_subspace(m["spec"], T.labels) if T.labels else None
        sufficiency = sufficiency and closed
        members.append({"params": m["params"], "closed": closed, "graded": graded})
    rng = Random(seed)
    closed_count = 0
    counterexamples = []
    for _ in range(samples):
        S = _random_rank2(rng)
        if is_subalgebra(S, T):
            closed_count += 1
            if not family_member(S, T):
                counterexamples.append({"v1": S.v1, "v2": S.v2})
    return ClassificationReport(
        algebra=T.name,
        family=descriptions[T.kind],
        members=members,
        sufficiency_pass=sufficiency,
        samples=samples,
        seed=seed,
        closed_sample_count=closed_count,
        counterexamples=counterexamples,
    )


# ----------------------------------------------------------------------
# consistency with the enveloping presentation
# ----------------------------------------------------------------------


def table_consistent_with_presentation(T: BracketTable, system: RewriteSystem | None = None,
                                       homogenizer: int | None = None,
                                       strict_pairs: bool = False,
                                       max_degree: int = 4) -> bool:
    """Every bracket relation reduces to zero in the presented algebra.

    With ``strict_pairs`` only pairs i < j are checked (used for the
    homogenized superalgebra whose square relations were deleted).
    """
    if system is None:
        system = complete(T.enveloping, max_degree=max_degree)
    n = T.dimension
    for i in range(n):
        for j in range(n):
            if strict_pairs and i >= j:
                continue
            rel = T.bracket_relation(i, j, homogenizer)
            if rel.is_zero():
                continue
            if not normal_form(rel, system).is_zero():
                return False
    return True


# ----------------------------------------------------------------------
# the rank identity behind the color classification
# ----------------------------------------------------------------------

# minimal dense arithmetic in Q[alpha, beta]; monomials are (i, j) exponent
# pairs mapped to coefficients


def _p(*terms) -> dict:
    out = {}
    for coeff, i, j in terms:
        c = out.get((i, j), 0) + Fraction(coeff)
        if c:
            out[(i, j)] = c
        else:
            out.pop((i, j), None)
    return out


def _pmul(f, g):
    out = {}
    for (i1, j1), c1 in f.items():
        for (i2, j2), c2 in g.items():
            key = (i1 + i2, j1 + j2)
            c = out.get(key, 0) + c1 * c2
            if c:
                out[key] = c
            else:
                out.pop(key, None)
    return out


def _psub(f, g):
    out = dict(f)
    for k, c in g.items():
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _preduce(f, basis):
    """Multivariate division by (lead monomial, polynomial) pairs, lex order."""
    f = dict(f)
    while f:
        lead = max(f)
        hit = None
        for lm, g in basis:
            if lead[0] >= lm[0] and lead[1] >= lm[1]:
                hit = (lm, g)
                break
        if hit is None:
            # move on: strip the irreducible lead into the remainder
            remainder_key = lead
            rem = f.pop(remainder_key)
            reduced = _preduce(f, basis)
            reduced[remainder_key] = rem
            return reduced
        lm, g = hit
        shift = (lead[0] - lm[0], lead[1] - lm[1])
        factor = {shift: f[lead] / g[lm]}
        f = _psub(f, _pmul(factor, g))
    return f


def _padd(f, g):
    out = dict(f)
    for k, c in g.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _det3(M):
    a, b, c = M[0]
    d, e, f = M[1]
    g, h, i = M[2]
    t1 = _pmul(a, _psub(_pmul(e, i), _pmul(f, h)))
    t2 = _pmul(b, _psub(_pmul(d, i), _pmul(f, g)))
    t3 = _pmul(c, _psub(_pmul(d, h), _pmul(e, g)))
    return _padd(_psub(t1, t2), t3)


def color_minor_identity() -> bool:
    """The rank condition of the color classification as an exact identity.

    The 3x5 coefficient matrix of v1, v2 and their three brackets has all
    ten 3x3 minors inside the ideal (2 alpha beta, alpha^2 + beta^2 - 1),
    and two of the minors recover the two generators, so the rank <= 2
    locus is exactly 2 alpha beta = 0 = alpha^2 + beta^2 - 1.
    """
    one = _p((1, 0, 0))
    zero = {}
    alpha = _p((1, 1, 0))
    beta = _p((1, 0, 1))
    two_alpha = _p((2, 1, 0))
    two_beta = _p((2, 0, 1))
    cols = [
        [one, zero, alpha],
        [zero, one, beta],
        [zero, two_alpha, zero],
        [two_beta, zero, zero],
        [alpha, beta, one],
    ]
    # Groebner basis of (alpha beta, alpha^2 + beta^2 - 1) under lex
    gb = [
        ((1, 1), _p((1, 1, 1))),
        ((2, 0), _p((1, 2, 0), (1, 0, 2), (-1, 0, 0))),
        ((0, 3), _p((1, 0, 3), (-1, 0, 1))),
    ]
    # beta^3 - beta = beta (alpha^2 + beta^2 - 1) - alpha (alpha beta)
    check = _psub(
        _psub(_pmul(beta, _p((1, 2, 0), (1, 0, 2), (-1, 0, 0))),
              _pmul(alpha, _p((1, 1, 1)))),
        _p((1, 0, 3), (-1, 0, 1)),
    )
    if check:
        return False
    from itertools import combinations

    minors = []
    for triple in combinations(range(5), 3):
        M = [[cols[c][r] for c in triple] for r in range(3)]
        minors.append(_det3(M))
    if any(_preduce(m, gb) for m in minors):
        return False
    # the generators occur among the minors up to scale
    has_ab = any(set(m) == {(1, 1)} for m in minors)
    has_circle = any(
        set(m) == {(2, 0), (0, 2), (0, 0)}
        and m[(2, 0)] == m[(0, 2)] == -m[(0, 0)]
        for m in minors
    )
    return has_ab and has_circle
