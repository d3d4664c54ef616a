"""Degree-bounded confluent rewriting for presented algebras.

A presentation is turned into a reduction system by orienting each relation
so that its greatest word rewrites to the lower terms.  Overlap ambiguities
between rule left-hand sides are resolved in the classical diamond-lemma
style, but only up to a degree bound N: every overlap word of degree at
most N is checked, derived rules of higher degree are discarded and
flagged, and the resulting system certifies unique normal forms for
elements of degree at most N.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DegenerateRelationError,
    InhomogeneousError,
    OutOfCertifiedRangeError,
)
from .ncalg import EMPTY_WORD, NcPoly, TermOrder, Word, check_alphabet, group_degree

DEFAULT_MAX_DEGREE = 8


@dataclass(frozen=True)
class Presentation:
    """Generators plus defining relations of an associative algebra.

    Relations are free-algebra polynomials.  If ``grading_group`` is set,
    every generator must carry a group label and every relation must be
    group homogeneous.  Integer homogeneity is recorded, not required:
    enveloping algebras such as U(g) are genuinely inhomogeneous and are
    handled by filtering on total degree.
    """

    name: str
    generators: tuple
    relations: tuple
    grading_group: str | None = None
    # recorded metadata only (for example a characteristic hypothesis);
    # never part of presentation equality
    field_note: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", check_alphabet(self.generators))
        rels = tuple(self.relations)
        object.__setattr__(self, "relations", rels)
        n = len(self.generators)
        for i, rel in enumerate(rels):
            if rel.is_zero():
                raise DegenerateRelationError(f"relation {i} of {self.name!r} is zero")
            for w in rel.support():
                if any(g < 0 or g >= n for g in w):
                    raise ValueError(f"relation {i} of {self.name!r} uses undeclared generators")
        if self.grading_group is not None:
            labels = self.group_labels()
            for i, rel in enumerate(rels):
                degs = {group_degree(w, labels) for w in rel.support()}
                if len(degs) > 1:
                    raise InhomogeneousError(
                        f"relation {i} of {self.name!r} is not {self.grading_group}-homogeneous"
                    )

    @property
    def z_degrees(self) -> tuple:
        return tuple(g.z_degree for g in self.generators)

    def group_labels(self) -> tuple:
        return tuple(g.group_label for g in self.generators)

    def is_z_homogeneous(self) -> bool:
        return all(r.is_z_homogeneous(self.z_degrees) for r in self.relations)

    def generator_names(self) -> tuple:
        return tuple(g.name for g in self.generators)

    def gen_index(self, name: str) -> int:
        for g in self.generators:
            if g.name == name:
                return g.index
        raise KeyError(f"unknown generator {name!r} in {self.name!r}")

    def default_order(self) -> TermOrder:
        """Deglex with precedence in presentation order (first is highest)."""
        return TermOrder.from_precedence(self.z_degrees)


@dataclass(frozen=True)
class Rule:
    """An oriented relation lhs -> rhs with every rhs word below the lhs."""

    lhs: Word
    rhs: NcPoly


@dataclass(frozen=True)
class DerivedRule:
    """Provenance record for a rule added during completion."""

    lhs: Word
    source: str            # "relation" or "overlap"
    overlap_word: Word | None = None
    parents: tuple | None = None   # (lhs1, lhs2) for overlaps


@dataclass
class RewriteSystem:
    """A completed, degree-bounded reduction system.

    ``confluent_up_to`` is the degree at which every overlap ambiguity has
    been verified to resolve; normal forms are unique for inputs of degree
    at most this bound.  ``discarded_above_bound`` flags derived rules that
    were dropped because their degree exceeded the bound.
    """

    presentation: Presentation
    order: TermOrder
    rules: list
    degree_bound: int
    confluent_up_to: int
    trace: list = field(default_factory=list)
    discarded_above_bound: bool = False
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = _rule_index(self.rules)

    def rule_for(self, lhs: Word) -> Rule | None:
        for r in self.rules:
            if r.lhs == lhs:
                return r
        return None


# ----------------------------------------------------------------------
# raw-dict reduction engine
# ----------------------------------------------------------------------


def _rule_index(rules) -> dict:
    """Rules grouped by first letter of the lhs, preserving list order."""
    index = {}
    for r in rules:
        index.setdefault(r.lhs[0], []).append(r)
    return index


def _find_match(word: Word, index: dict):
    """Leftmost match of any rule lhs inside ``word``; ties broken by rule
    insertion order.  Returns (position, rule) or None."""
    n = len(word)
    for pos in range(n):
        for rule in index.get(word[pos], ()):
            L = rule.lhs
            if n - pos >= len(L) and word[pos:pos + len(L)] == L:
                return pos, rule
    return None


def _nf_dict(terms: dict, index: dict) -> dict:
    """Normal form of a word -> coefficient map under the indexed rules."""
    out = {}
    work = list(terms.items())
    while work:
        word, coeff = work.pop()
        if not coeff:
            continue
        m = _find_match(word, index)
        if m is None:
            s = out.get(word, 0) + coeff
            if s:
                out[word] = s
            else:
                del out[word]
            continue
        pos, rule = m
        prefix = word[:pos]
        suffix = word[pos + len(rule.lhs):]
        for w, c in rule.rhs.items():
            work.append((prefix + w + suffix, coeff * c))
    return out


def _orient(poly: NcPoly, order: TermOrder) -> Rule:
    """Orient a nonzero polynomial into a rule on its greatest word."""
    lead = order.leading_word(poly)
    if lead == EMPTY_WORD:
        raise DegenerateRelationError(
            "relation reduces to a nonzero constant; the presented algebra is zero"
        )
    c = poly.coeff(lead)
    rest = poly - NcPoly.monomial(lead, c)
    return Rule(lead, rest.scale(Fraction(-1) / c))


def complete(presentation: Presentation, order: TermOrder | None = None,
             max_degree: int = DEFAULT_MAX_DEGREE) -> RewriteSystem:
    """Resolve all overlap ambiguities of degree <= max_degree.

    The returned system is inter-reduced: no rule lhs contains another rule
    lhs as a subword, and every rhs is in normal form.
    """
    if order is None:
        order = presentation.default_order()
    max_rel_degree = max(
        (order.max_degree(r) for r in presentation.relations), default=0)
    if max_degree < max_rel_degree:
        raise ValueError(f"degree bound {max_degree} is below the maximal relation degree {max_rel_degree}")

    rules: list = []
    index: dict = {}
    trace: list = []
    discarded = False
    poly_queue = deque()
    pair_queue = deque()   # (lhs1, lhs2); live rules looked up on pop
    for rel in presentation.relations:
        poly_queue.append((rel, DerivedRule(EMPTY_WORD, "relation")))

    def push_rule(poly, provenance):
        nonlocal index, discarded
        red = NcPoly(_nf_dict(poly.terms, index))
        if red.is_zero():
            return
        rule = _orient(red, order)
        if order.word_degree(rule.lhs) > max_degree:
            discarded = True
            return
        # inter-reduce: retire any rule whose lhs contains the new lhs
        retired = []
        kept = []
        for r in rules:
            if _contains(r.lhs, rule.lhs):
                retired.append(r)
            else:
                kept.append(r)
        rules[:] = kept + [rule]
        index = _rule_index(rules)
        trace.append(DerivedRule(rule.lhs, provenance.source, provenance.overlap_word, provenance.parents))
        for r in retired:
            poly_queue.append((NcPoly.monomial(r.lhs) - r.rhs, DerivedRule(EMPTY_WORD, "relation")))
        # keep right-hand sides fully reduced
        for i, r in enumerate(rules):
            red_rhs = NcPoly(_nf_dict(r.rhs.terms, index))
            if red_rhs != r.rhs:
                rules[i] = Rule(r.lhs, red_rhs)
        index = _rule_index(rules)
        # schedule overlaps of the new rule with every live rule
        for r in rules:
            pair_queue.append((rule.lhs, r.lhs))
            if r.lhs != rule.lhs:
                pair_queue.append((r.lhs, rule.lhs))

    def drain_queues():
        while poly_queue or pair_queue:
            while poly_queue:
                poly, prov = poly_queue.popleft()
                push_rule(poly, prov)
            if pair_queue:
                l1, l2 = pair_queue.popleft()
                r1 = next((r for r in rules if r.lhs == l1), None)
                r2 = next((r for r in rules if r.lhs == l2), None)
                if r1 is None or r2 is None:
                    continue
                for ov in _overlaps(l1, l2):
                    if order.word_degree(ov) > max_degree:
                        continue
                    diff = _spolynomial(ov, r1, r2, index)
                    if diff:
                        poly_queue.append(
                            (NcPoly(diff), DerivedRule(EMPTY_WORD, "overlap", ov, (l1, l2)))
                        )

    drain_queues()

    # verification sweep: retired-rule bookkeeping above may skip pairs, so
    # re-check every live pair until a full pass finds nothing new
    guard = 0
    while True:
        guard += 1
        if guard > 1000:
            raise RuntimeError("completion failed to stabilize")
        dirty = False
        snapshot = list(rules)
        for r1 in snapshot:
            for r2 in snapshot:
                for ov in _overlaps(r1.lhs, r2.lhs):
                    if order.word_degree(ov) > max_degree:
                        continue
                    diff = _spolynomial(ov, r1, r2, index)
                    if diff:
                        poly_queue.append(
                            (NcPoly(diff), DerivedRule(EMPTY_WORD, "overlap", ov, (r1.lhs, r2.lhs)))
                        )
                        dirty = True
        if not dirty:
            break
        drain_queues()

    return RewriteSystem(
        presentation=presentation,
        order=order,
        rules=list(rules),
        degree_bound=max_degree,
        confluent_up_to=max_degree,
        trace=trace,
        discarded_above_bound=discarded,
    )


def _contains(word: Word, sub: Word) -> bool:
    n, m = len(word), len(sub)
    return any(word[i:i + m] == sub for i in range(n - m + 1))


def _overlaps(l1: Word, l2: Word):
    """Proper overlap words: a suffix of l1 equals a prefix of l2."""
    for k in range(1, min(len(l1), len(l2))):
        if l1[-k:] == l2[:k]:
            yield l1 + l2[k:]


def _spolynomial(overlap: Word, r1: Rule, r2: Rule, index: dict) -> dict:
    """Difference of the two one-step reductions of the overlap word, in
    normal form.  Empty dict means the ambiguity resolves."""
    tail = overlap[len(r1.lhs):]
    p1 = {w + tail: c for w, c in r1.rhs.items()}
    head = overlap[: len(overlap) - len(r2.lhs)]
    p2 = {head + w: c for w, c in r2.rhs.items()}
    diff = dict(p1)
    for w, c in p2.items():
        s = diff.get(w, 0) - c
        if s:
            diff[w] = s
        else:
            diff.pop(w, None)
    return _nf_dict(diff, index)


# ----------------------------------------------------------------------
# queries
# ----------------------------------------------------------------------


def normal_form(x: NcPoly, system: RewriteSystem) -> NcPoly:
    """The unique normal form of ``x`` (unique when the degree of ``x`` is
    within the certified bound, which is enforced)."""
    deg = system.order.max_degree(x)
    if deg > system.degree_bound:
        raise OutOfCertifiedRangeError(
            f"degree {deg} exceeds the certified bound {system.degree_bound}"
        )
    return NcPoly(_nf_dict(x.terms, system._index))


def ideal_member(x: NcPoly, system: RewriteSystem) -> bool:
    """Certified two-sided ideal membership at bounded degree."""
    deg = system.order.max_degree(x)
    if deg > system.confluent_up_to:
        raise OutOfCertifiedRangeError(
            f"degree {deg} exceeds the confluent range {system.confluent_up_to}"
        )
    return normal_form(x, system).is_zero()


@dataclass(frozen=True)
class TraceStep:
    """One rewrite application: the coefficient times ``word`` was replaced
    using the rule with left side ``rule_lhs`` at ``position``."""

    word: Word
    coefficient: Fraction
    position: int
    rule_lhs: Word


def derivation_trace(x: NcPoly, system: RewriteSystem) -> list:
    """A replayable list of single rewrite steps from ``x`` to its normal form.

    Steps always rewrite the greatest reducible word of the current
    polynomial at its leftmost reducible position, so the trace is
    deterministic.  Expanding the steps witnesses that x - normal_form(x)
    lies in the two-sided ideal.
    """
    deg = system.order.max_degree(x)
    if deg > system.degree_bound:
        raise OutOfCertifiedRangeError(
            f"degree {deg} exceeds the certified bound {system.degree_bound}"
        )
    index = system._index
    steps = []
    current = dict(x.terms)
    while True:
        matches = []
        for word in current:
            m = _find_match(word, index)
            if m is not None:
                matches.append((word, m))
        if not matches:
            break
        word, (pos, rule) = max(matches, key=lambda t: system.order.sort_key(t[0]))
        coeff = current.pop(word)
        steps.append(TraceStep(word, coeff, pos, rule.lhs))
        prefix, suffix = word[:pos], word[pos + len(rule.lhs):]
        for w, c in rule.rhs.items():
            nw = prefix + w + suffix
            s = current.get(nw, 0) + coeff * c
            if s:
                current[nw] = s
            else:
                del current[nw]
    return steps


def replay_trace(x: NcPoly, steps, system: RewriteSystem) -> NcPoly:
    """Apply the recorded steps to ``x``; returns the final polynomial."""
    current = x
    for st in steps:
        rule = system.rule_for(st.rule_lhs)
        if rule is None:
            raise ValueError(f"trace references unknown rule {st.rule_lhs}")
        prefix = st.word[: st.position]
        suffix = st.word[st.position + len(rule.lhs):]
        replaced = NcPoly.monomial(st.word, st.coefficient)
        expansion = NcPoly({prefix + w + suffix: st.coefficient * c for w, c in rule.rhs.items()})
        current = current - replaced + expansion
    return current


def confluence_certificate(system: RewriteSystem) -> bool:
    """Re-check every bounded overlap of the final rules; True if all
    ambiguities resolve to the same normal form."""
    index = system._index
    for r1 in system.rules:
        for r2 in system.rules:
            for ov in _overlaps(r1.lhs, r2.lhs):
                if system.order.word_degree(ov) > system.confluent_up_to:
                    continue
                if _spolynomial(ov, r1, r2, index):
                    return False
    return True
