"""Graded and filtered dimensions by two independent routes.

The working route counts rewrite normal forms; the audit route spans the
graded pieces of the defining ideal inside the free algebra and row-reduces
with exact rational arithmetic, never consulting the rewrite system.  The
filtered variant realizes cyclic quotients of genuinely inhomogeneous
presentations (enveloping algebras) the same brute-force way.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product

from .errors import InhomogeneousError, OracleCapError, OutOfCertifiedRangeError
from .linalg import SparseEchelon
from .ncalg import EMPTY_WORD, TermOrder
from .rewrite import Presentation, RewriteSystem, _nf_dict, complete

ORACLE_CAP_ENV = "LINEMOD_ORACLE_CAP"
ORACLE_CAP_DEFAULT = 4096


@dataclass(frozen=True)
class HilbertFunction:
    """Graded dimensions indexed by degree 0..N."""

    dims: tuple

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))

    def __getitem__(self, d: int) -> int:
        return self.dims[d]

    def __len__(self):
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def __eq__(self, other):
        if isinstance(other, HilbertFunction):
            return self.dims == other.dims
        return self.dims == tuple(other)

    def __hash__(self):
        return hash(self.dims)

    def truncate(self, n: int) -> "HilbertFunction":
        return HilbertFunction(self.dims[: n + 1])


def line_module_dims(max_degree: int) -> HilbertFunction:
    """The target profile 1, 2, ..., N+1 of a line module."""
    return HilbertFunction(tuple(range(1, max_degree + 2)))


# ----------------------------------------------------------------------
# rewrite route
# ----------------------------------------------------------------------


def _as_system(p, max_degree: int, order: TermOrder | None) -> RewriteSystem:
    if isinstance(p, RewriteSystem):
        if p.confluent_up_to < max_degree:
            raise OutOfCertifiedRangeError(
                f"system certified to degree {p.confluent_up_to}, need {max_degree}"
            )
        return p
    return complete(p, order=order, max_degree=max_degree)


def normal_words_by_degree(system: RewriteSystem, max_degree: int) -> dict:
    """Words of each degree <= max_degree containing no rule lhs.

    Built incrementally: a one-letter extension of a normal word is normal
    iff no lhs is a suffix of it.  Word lists are in a deterministic
    generation order and form a basis of the quotient in certified degrees.
    """
    degrees = system.order.degrees
    lhs_by_last = {}
    for r in system.rules:
        lhs_by_last.setdefault(r.lhs[-1], []).append(r.lhs)
    out = {d: [] for d in range(max_degree + 1)}
    out[0].append(EMPTY_WORD)
    frontier = [(EMPTY_WORD, 0)]
    ngens = len(degrees)
    while frontier:
        new_frontier = []
        for word, deg in frontier:
            for g in range(ngens):
                nd = deg + degrees[g]
                if nd > max_degree:
                    continue
                nw = word + (g,)
                ok = True
                for lhs in lhs_by_last.get(g, ()):
                    if len(lhs) <= len(nw) and nw[-len(lhs):] == lhs:
                        ok = False
                        break
                if ok:
                    out[nd].append(nw)
                    new_frontier.append((nw, nd))
        frontier = new_frontier
    return out


def hilbert_algebra(p, max_degree: int, order: TermOrder | None = None) -> HilbertFunction:
    """Graded dimensions of the quotient algebra, by counting normal forms.

    ``p`` may be a Presentation (completed here) or an already completed
    RewriteSystem.
    """
    pres = p.presentation if isinstance(p, RewriteSystem) else p
    if not pres.is_z_homogeneous():
        raise InhomogeneousError(
            f"{pres.name!r} is not graded; use filtered_cyclic_dims for filtered dimensions"
        )
    system = _as_system(p, max_degree, order)
    words = normal_words_by_degree(system, max_degree)
    return HilbertFunction(tuple(len(words[d]) for d in range(max_degree + 1)))


# ----------------------------------------------------------------------
# brute-force oracle route
# ----------------------------------------------------------------------


def oracle_cap() -> int:
    value = os.environ.get(ORACLE_CAP_ENV)
    return int(value) if value else ORACLE_CAP_DEFAULT


_WORD_CACHE: dict = {}


def words_of_degree(degrees: tuple, d: int) -> list:
    """All free words of integer degree exactly d, in lexicographic index
    order (this fixes the oracle's column order)."""
    key = (degrees, d)
    cached = _WORD_CACHE.get(key)
    if cached is not None:
        return cached
    if all(w == 1 for w in degrees):
        out = [w for w in product(range(len(degrees)), repeat=d)]
    else:
        out = []

        def extend(word, deg):
            if deg == d:
                out.append(tuple(word))
                return
            for g in range(len(degrees)):
                if deg + degrees[g] <= d:
                    word.append(g)
                    extend(word, deg + degrees[g])
                    word.pop()

        extend([], 0)
    if len(_WORD_CACHE) > 64:
        _WORD_CACHE.clear()
    _WORD_CACHE[key] = out
    return out


def oracle_graded_dims(p: Presentation, max_degree: int, cap: int | None = None) -> HilbertFunction:
    """Graded dimensions by row-reducing the ideal's graded pieces.

    For each degree d, the rows u*r*v over all relations r and all word
    pairs (u, v) of complementary degree span the degree-d piece of the
    two-sided ideal; the quotient dimension is the number of degree-d words
    minus the rank.  This route never consults the rewrite system.
    """
    if not p.is_z_homogeneous():
        raise InhomogeneousError(f"{p.name!r} is not graded")
    cap = oracle_cap() if cap is None else cap
    degrees = p.z_degrees
    dims = []
    for d in range(max_degree + 1):
        columns = words_of_degree(degrees, d)
        if len(columns) > cap:
            raise OracleCapError(
                f"degree {d} has {len(columns)} monomials, above the cap {cap}; "
                f"set {ORACLE_CAP_ENV} or pass cap= to allow this"
            )
        col_pos = {w: i for i, w in enumerate(columns)}
        ech = SparseEchelon()
        for rel in p.relations:
            rel_deg = next(iter(rel.z_degrees(degrees)))
            if rel_deg > d:
                continue
            for i in range(d - rel_deg + 1):
                for u in words_of_degree(degrees, i):
                    for v in words_of_degree(degrees, d - rel_deg - i):
                        row = {col_pos[u + w + v]: c for w, c in rel.items()}
                        ech.add(row)
        dims.append(len(columns) - ech.rank)
    return HilbertFunction(tuple(dims))


# ----------------------------------------------------------------------
# cyclic graded left modules
# ----------------------------------------------------------------------


@dataclass
class CyclicModuleModel:
    """Rewrite-route model of A/(sum A g_i) in degrees <= N.

    ``basis`` holds the normal words of each degree (a basis of A_d);
    ``ideal`` holds, per degree, the echelonized row space of the left
    ideal expressed over those words.
    """

    system: RewriteSystem
    generators: tuple
    max_degree: int
    basis: dict
    ideal: list
    positions: list

    def dim(self, d: int) -> int:
        return len(self.basis[d]) - self.ideal[d].rank

    def dims(self) -> HilbertFunction:
        return HilbertFunction(tuple(self.dim(d) for d in range(self.max_degree + 1)))

    def reduce_vector(self, d: int, row: dict) -> dict:
        return self.ideal[d].reduce(row)


def cyclic_module_model(system: RewriteSystem, generators, max_degree: int) -> CyclicModuleModel:
    """Build the degreewise linear model of the cyclic left module."""
    pres = system.presentation
    if not pres.is_z_homogeneous():
        raise InhomogeneousError(f"{pres.name!r} is not graded")
    if system.confluent_up_to < max_degree:
        raise OutOfCertifiedRangeError(
            f"system certified to degree {system.confluent_up_to}, need {max_degree}"
        )
    degrees = pres.z_degrees
    gens = tuple(generators)
    gen_degs = []
    for g in gens:
        if g.is_zero() or not g.is_z_homogeneous(degrees):
            raise InhomogeneousError("module generators must be nonzero and homogeneous")
        gen_degs.append(next(iter(g.z_degrees(degrees))))
    basis = normal_words_by_degree(system, max_degree)
    positions = [{w: i for i, w in enumerate(basis[d])} for d in range(max_degree + 1)]
    ideal = [SparseEchelon() for _ in range(max_degree + 1)]
    index = system._index
    for d in range(max_degree + 1):
        pos = positions[d]
        for g, gdeg in zip(gens, gen_degs):
            if d < gdeg:
                continue
            for b in basis[d - gdeg]:
                prod_terms = {b + w: c for w, c in g.items()}
                nf = _nf_dict(prod_terms, index)
                ideal[d].add({pos[w]: c for w, c in nf.items()})
    return CyclicModuleModel(system, gens, max_degree, basis, ideal, positions)


def hilbert_cyclic_left_module(system: RewriteSystem, generators, max_degree: int) -> HilbertFunction:
    """Graded dimensions of A/(sum A g_i) for homogeneous generators g_i.

    With no generators this is the Hilbert function of the algebra itself.
    """
    if not tuple(generators):
        return hilbert_algebra(system, max_degree)
    return cyclic_module_model(system, generators, max_degree).dims()


# ----------------------------------------------------------------------
# filtered route (inhomogeneous presentations)
# ----------------------------------------------------------------------


@dataclass
class FilteredModel:
    """Free-word model of a filtered quotient of a presented algebra.

    Columns are free words ordered by decreasing total degree, so the
    echelon pivots of level <= i span exactly the intersection of the row
    space with filtration level i.  The two-sided ideal rows are built once
    per presentation and degree bound; left-ideal shift generators are
    layered on top per query.
    """

    presentation: Presentation
    max_degree: int
    word_level: dict
    base_rows: list

    def _column_key(self, w):
        return (-self.word_level[w], w)

    def ideal_echelon(self, shift_generators) -> SparseEchelon:
        """Echelon of (two-sided relation ideal) + (left ideal of shifts),
        restricted to filtration level <= max_degree."""
        degrees = self.presentation.z_degrees
        ech = SparseEchelon(column_key=self._column_key)
        for row in self.base_rows:
            ech.add(row)
        for s in shift_generators:
            if s.is_zero():
                continue
            s_deg = max(sum(degrees[g] for g in w) for w in s.support())
            for i in range(self.max_degree - s_deg + 1):
                for u in words_of_degree(degrees, i):
                    ech.add({u + w: c for w, c in s.items()})
        return ech

    def quotient_dims(self, shift_generators) -> HilbertFunction:
        ech = self.ideal_echelon(shift_generators)
        pivot_levels = [self.word_level[c] for c in ech.pivot_columns()]
        dims = []
        for i in range(self.max_degree + 1):
            total = sum(1 for lv in self.word_level.values() if lv <= i)
            cut = sum(1 for lv in pivot_levels if lv <= i)
            dims.append(total - cut)
        return HilbertFunction(tuple(dims))

    def contains(self, row: dict, shift_generators) -> bool:
        return self.ideal_echelon(shift_generators).contains(row)


_FILTERED_CACHE: dict = {}


def filtered_model(p: Presentation, max_degree: int, cap: int | None = None) -> FilteredModel:
    """Build (and cache) the filtered free-word model of a presentation."""
    key = (p, max_degree)
    cached = _FILTERED_CACHE.get(key)
    if cached is not None:
        return cached
    cap = oracle_cap() if cap is None else cap
    degrees = p.z_degrees
    word_level = {}
    count = 0
    for d in range(max_degree + 1):
        layer = words_of_degree(degrees, d)
        count += len(layer)
        if count > cap:
            raise OracleCapError(
                f"filtration {d} needs {count} monomials, above the cap {cap}"
            )
        for w in layer:
            word_level[w] = d
    # echelonize the two-sided rows once; the reduced pivot rows span the
    # same space and re-insert cheaply for each shift query
    base = SparseEchelon(column_key=lambda w: (-word_level[w], w))
    for rel in p.relations:
        rel_deg = max(sum(degrees[g] for g in w) for w in rel.support())
        for i in range(max_degree - rel_deg + 1):
            for u in words_of_degree(degrees, i):
                for j in range(max_degree - rel_deg - i + 1):
                    for v in words_of_degree(degrees, j):
                        base.add({u + w + v: c for w, c in rel.items()})
    model = FilteredModel(p, max_degree, word_level, base.pivot_rows())
    if len(_FILTERED_CACHE) > 16:
        _FILTERED_CACHE.clear()
    _FILTERED_CACHE[key] = model
    return model


def filtered_cyclic_dims(p: Presentation, shift_generators, max_degree: int,
                         cap: int | None = None) -> HilbertFunction:
    """Filtration dimensions of U/(U s_1 + ... + U s_m) in the free algebra.

    U is the possibly inhomogeneous quotient presented by ``p`` filtered by
    total degree, and the s_i are arbitrary free-algebra elements (for an
    induced module, s = x - phi(x) over the subalgebra basis).  dims[i] is
    the dimension of filtration level i of the quotient module.  Everything
    is spanned directly over free words, so the result is independent of
    any rewriting.
    """
    return filtered_model(p, max_degree, cap).quotient_dims(shift_generators)
