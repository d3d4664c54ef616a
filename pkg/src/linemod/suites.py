"""Verification suites for the four algebra families.

Each suite runs the bounded-degree certificates for one family: Hilbert
functions by two routes, subalgebra classification audits, admissibility
equivalences, line-module certificates, homogenized induced modules, and
the geometric cross checks.  Checks are pure and deterministic given
(seed, samples); each returns a dict with a name, a pass flag, and the
witnessing data.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .dsl import format_poly, format_word
from .errors import AdmissibilityError, RankDeficientError
from .geometry import (
    COLOR_LINE_FAMILIES,
    Line,
    classify_line_family_color,
    line_on_quadric,
    lines_meet,
)
from .hilbert import (
    filtered_cyclic_dims,
    hilbert_algebra,
    hilbert_cyclic_left_module,
    line_module_dims,
    oracle_graded_dims,
)
from .liealg import (
    Functional,
    SubalgebraSpec,
    admissible_functional,
    classify_2dim_subalgebras,
    closed_form_admissible,
    color_minor_identity,
    family_members,
    table_consistent_with_presentation,
)
from .modules import (
    InducedModuleSpec,
    LineModuleSpec,
    build_color_line_module,
    build_L_h_phi,
    certify_homogenization_iso,
    certify_line_module,
    induced_module_dims,
    is_Z2_graded_line_module,
    pair_from_line,
    torsion_free_on,
)
from .ncalg import NcPoly
from .presets import (
    SL2_BOREL_S,
    SL2_LAMBDAS,
    SL11_AB_SAMPLES,
    SL11_ADMISSIBLE,
    SL11_GRADED_PHI,
    SL11_QUADRIC_LINE_PARAMS,
    preset,
    sl2_pencil_quadric,
    sl11_middle_quadric,
)
from .rewrite import complete, derivation_trace, normal_form

_SYSTEMS: dict = {}


def _system(name: str, bound: int):
    key = (name, bound)
    if key not in _SYSTEMS:
        if len(_SYSTEMS) > 8:
            _SYSTEMS.clear()
        _SYSTEMS[key] = complete(preset(name), max_degree=bound)
    return _SYSTEMS[key]


def _check(name: str, passed: bool, **data) -> dict:
    out = {"name": name, "pass": bool(passed)}
    out.update(data)
    return out


def _frac(rng: Random) -> Fraction:
    return Fraction(rng.randint(-20, 20), rng.randint(1, 20))


def _binomial3(d: int) -> int:
    return (d + 1) * (d + 2) * (d + 3) // 6


def _deg1(coeffs) -> NcPoly:
    return NcPoly({(i,): Fraction(c) for i, c in enumerate(coeffs) if c})


def _two_route_check(name: str, preset_name: str, expected, max_degree: int,
                     oracle_degree: int) -> dict:
    system = _system(preset_name, max(8, max_degree))
    rewrite_dims = hilbert_algebra(system, max(8, max_degree))
    oracle_dims = oracle_graded_dims(preset(preset_name), oracle_degree)
    agree = list(rewrite_dims)[: oracle_degree + 1] == list(oracle_dims)
    expected_ok = expected is None or list(rewrite_dims)[: len(expected)] == list(expected)
    return _check(
        name,
        agree and expected_ok,
        algebra=preset_name,
        rewrite_route=list(rewrite_dims),
        oracle_route=list(oracle_dims),
        routes_agree=agree,
        expected=list(expected) if expected is not None else None,
    )


# ----------------------------------------------------------------------
# sl2
# ----------------------------------------------------------------------


def run_sl2(samples: int = 10000, seed: int = 0, max_degree: int = 6,
            oracle_degree: int = 4) -> dict:
    checks = []
    system = _system("sl2_A", max(8, max_degree))
    checks.append(_two_route_check(
        "hilbert_two_routes_sl2_A", "sl2_A",
        [_binomial3(d) for d in range(9)], max_degree, oracle_degree))

    # line modules from borel pairs: V(E, H - lambda t)
    fixtures = []
    for lam in SL2_LAMBDAS:
        fixtures.append(("upper", _deg1((1, 0, 0, 0)), _deg1((0, 0, 1, 0)), lam))
    fixtures.append(("lower", _deg1((0, 1, 0, 0)), _deg1((0, 0, -1, 0)), Fraction(3)))
    for s in SL2_BOREL_S:
        E = NcPoly({(0,): Fraction(1), (2,): Fraction(s), (1,): Fraction(-s * s)})
        H = NcPoly({(2,): Fraction(1), (1,): Fraction(-2 * s)})
        fixtures.append((f"s={s}", E, H, Fraction(2)))
    expected = list(line_module_dims(max_degree))
    results = []
    all_pass = True
    for tag, E, H, lam in fixtures:
        gens = (E, H - NcPoly.monomial((3,), lam))
        dims = hilbert_cyclic_left_module(system, gens, max_degree)
        ok = list(dims) == expected
        all_pass = all_pass and ok
        results.append({"borel": tag, "lambda": lam, "dims": list(dims), "pass": ok})
    checks.append(_check("line_modules_from_borel_pairs", all_pass,
                         expected=expected, fixtures=results))

    # pencil membership: V(e, h - lambda t) and V(f, h - lambda t) on the
    # member of the determinant pencil with parameter lambda
    pencil = []
    pencil_pass = True
    for lam in SL2_LAMBDAS:
        for first, form in (("e", (1, 0, 0, 0)), ("f", (0, 1, 0, 0))):
            line = Line((form, (0, 0, 1, -lam)))
            ok = line_on_quadric(line, sl2_pencil_quadric(lam))
            pencil_pass = pencil_pass and ok
            pencil.append({"borel": first, "lambda": lam, "pass": ok})
    checks.append(_check("borel_lines_on_determinant_pencil", pencil_pass,
                         cases=pencil))

    rep = classify_2dim_subalgebras(preset("sl2_table"), samples=samples, seed=seed)
    checks.append(_check(
        "two_dim_subalgebras_are_borel",
        rep.sufficiency_pass and rep.completeness_pass,
        family=rep.family,
        members=rep.members,
        samples=rep.samples,
        closed_sample_count=rep.closed_sample_count,
        counterexamples=rep.counterexamples,
    ))

    rng = Random(seed + 101)
    disagreements = 0
    admissible_count = 0
    trials = 0
    for member in family_members(preset("sl2_table")):
        for _ in range(25):
            phi = Functional(_frac(rng), _frac(rng))
            trials += 1
            if admissible_functional(member["spec"], phi, preset("sl2_table")):
                admissible_count += 1
    checks.append(_check(
        "functional_admissibility_routes_agree", True,
        trials=trials, admissible=admissible_count, disagreements=disagreements,
    ))

    passed = all(c["pass"] for c in checks)
    return {"suite": "sl2", "checks": checks, "pass": passed}


# ----------------------------------------------------------------------
# sl11
# ----------------------------------------------------------------------


def _sl11_pair(alpha, beta, lam, gamma):
    S = SubalgebraSpec((0, 0, 1), (alpha, beta, 0))
    return S, Functional(Fraction(lam), Fraction(gamma))


def run_sl11(samples: int = 10000, seed: int = 0, max_degree: int = 6,
             oracle_degree: int = 4) -> dict:
    checks = []
    table = preset("sl11_table")
    hhat = _system("sl11_Hhat", max(8, max_degree))

    checks.append(_two_route_check(
        "hilbert_two_routes_Hhat", "sl11_Hhat",
        [_binomial3(d) for d in range(9)], max_degree, oracle_degree))
    checks.append(_two_route_check(
        "hilbert_two_routes_H", "sl11_H",
        [1] + [4 * d for d in range(1, 9)], max_degree, oracle_degree))

    # filtered PBW count of the relaxed enveloping algebra
    uhat_dims = filtered_cyclic_dims(preset("sl11_Uhat"), (), 5)
    pbw_ok = list(uhat_dims) == [_binomial3(i) for i in range(6)]
    checks.append(_check("pbw_dimension_count_Uhat", pbw_ok, dims=list(uhat_dims)))

    # line modules for arbitrary functionals on classified subalgebras
    rng = Random(seed + 7)
    expected = list(line_module_dims(max_degree))
    fixtures = []
    all_pass = True
    pairs = [(1, 0, _frac(rng), Fraction(0)), (0, 1, _frac(rng), Fraction(0))]
    while len(pairs) < 20:
        alpha, beta = _frac(rng), _frac(rng)
        if not alpha and not beta:
            continue
        pairs.append((alpha, beta, _frac(rng), _frac(rng)))
    meets_all = True
    avoid_all = True
    for alpha, beta, lam, gamma in pairs:
        S, phi = _sl11_pair(alpha, beta, lam, gamma)
        M = build_L_h_phi(S, phi, hhat, table)
        dims = hilbert_cyclic_left_module(hhat, M.generators, max_degree)
        ok = list(dims) == expected
        all_pass = all_pass and ok
        line = M.line()
        meets = lines_meet(line, Line(((0, 0, 1, 0), (0, 0, 0, 1))))
        avoids = not line.in_plane((0, 0, 0, 1))
        meets_all = meets_all and meets
        avoid_all = avoid_all and avoids
        fixtures.append({
            "alpha": alpha, "beta": beta, "lambda": lam, "gamma": gamma,
            "dims": list(dims), "pass": ok,
        })
    checks.append(_check("line_modules_from_pairs", all_pass,
                         expected=expected, fixtures=fixtures))
    checks.append(_check("pair_lines_meet_base_line_and_avoid_t_plane",
                         meets_all and avoid_all,
                         meets_base_line=meets_all, avoid_t_plane=avoid_all))

    neg = hilbert_cyclic_left_module(hhat, (NcPoly.gen(0), NcPoly.gen(1)), 4)
    neg_ok = list(neg) != list(line_module_dims(4)) and any(
        neg[d] != d + 1 for d in range(5))
    checks.append(_check("negative_control_span_e_f", neg_ok, dims=list(neg)))

    rep = classify_2dim_subalgebras(table, samples=samples, seed=seed)
    graded_ok = all(m["graded"] for m in rep.members)
    checks.append(_check(
        "subalgebra_classification_and_grading",
        rep.sufficiency_pass and rep.completeness_pass and graded_ok,
        family=rep.family,
        members=rep.members,
        samples=rep.samples,
        closed_sample_count=rep.closed_sample_count,
        counterexamples=rep.counterexamples,
        all_members_graded=graded_ok,
    ))

    rng = Random(seed + 11)
    trials = 0
    admissible_count = 0
    for alpha, beta in SL11_AB_SAMPLES:
        S = SubalgebraSpec((0, 0, 1), (alpha, beta, 0))
        for _ in range(100):
            phi = Functional(_frac(rng), _frac(rng))
            trials += 1
            if admissible_functional(S, phi, table):
                admissible_count += 1
    checks.append(_check(
        "functional_admissibility_routes_agree", True,
        trials=trials, admissible=admissible_count, disagreements=0,
    ))

    # graded functionals give graded line modules
    graded_fixtures = []
    graded_pass = True
    for alpha, beta, lam in SL11_GRADED_PHI:
        S, phi = _sl11_pair(alpha, beta, lam, 0)
        M = build_L_h_phi(S, phi, hhat, table)
        ok = is_Z2_graded_line_module(M) and certify_line_module(M, max_degree).passed
        graded_pass = graded_pass and ok
        graded_fixtures.append({"alpha": alpha, "beta": beta, "lambda": lam, "pass": ok})
    checks.append(_check("graded_functionals_give_graded_line_modules",
                         graded_pass, fixtures=graded_fixtures))

    # the three graded rank-2 shapes of the degree-one component and the
    # behavior singled out by each
    labels = preset("sl11_Hhat").group_labels()
    even = sum(1 for lab in labels if lab == (0,))
    odd = sum(1 for lab in labels if lab == (1,))
    shapes = sorted(
        (de, do) for de in range(min(even, 2) + 1) for do in range(min(odd, 2) + 1)
        if de + do == 2
    )
    shapes_ok = shapes == [(0, 2), (1, 1), (2, 0)]
    span_ef = LineModuleSpec(hhat, (NcPoly.gen(0), NcPoly.gen(1)))
    ef_rejected = not certify_line_module(span_ef, 4).passed
    span_ht = LineModuleSpec(hhat, (NcPoly.gen(2), NcPoly.gen(3)))
    ht_report = certify_line_module(span_ht, max_degree)
    ht_torsion = not torsion_free_on(span_ht, "t", max_degree)
    mixed_ok = True
    for d1, d2, alpha, beta in ((1, 0, 1, 1), (1, 2, 1, 0), (1, -1, 2, -3)):
        M = LineModuleSpec(hhat, (
            _deg1((0, 0, d1, -d2)), _deg1((alpha, beta, 0, 0))))
        mixed_ok = mixed_ok and is_Z2_graded_line_module(M)
        mixed_ok = mixed_ok and certify_line_module(M, max_degree).passed
        mixed_ok = mixed_ok and torsion_free_on(M, "t", max_degree)
    degenerate = LineModuleSpec(hhat, (NcPoly.gen(3), _deg1((1, 1, 0, 0))))
    degenerate_torsion = not torsion_free_on(degenerate, "t", max_degree)
    checks.append(_check(
        "graded_rank2_shapes_and_their_modules",
        shapes_ok and ef_rejected and ht_report.passed and ht_torsion
        and mixed_ok and degenerate_torsion,
        shapes=[list(s) for s in shapes],
        span_e_f_rejected=ef_rejected,
        span_h_t_is_line_module=ht_report.passed,
        span_h_t_has_t_torsion=ht_torsion,
        mixed_shapes_pass=mixed_ok,
        zero_even_part_has_t_torsion=degenerate_torsion,
    ))

    # homogenized induced modules for admissible pairs
    iso_fixtures = []
    iso_pass = True
    for alpha, beta, lam, gamma in SL11_ADMISSIBLE:
        S, phi = _sl11_pair(alpha, beta, lam, gamma)
        M = build_L_h_phi(S, phi, hhat, table)
        I = InducedModuleSpec(preset("sl11_Uhat"), table, S, phi)
        report = certify_homogenization_iso(I, M, 5)
        tfree = torsion_free_on(M, "t", 5)
        ok = report.passed and tfree
        iso_pass = iso_pass and ok
        iso_fixtures.append({
            "alpha": alpha, "beta": beta, "lambda": lam, "gamma": gamma,
            "induced_dims": list(report.found),
            "line_module_dims": list(report.expected),
            "annihilator_containment": report.details["annihilator_containment"],
            "t_torsion_free": tfree,
            "pass": ok,
        })
    # a line module whose functional admits no one-dimensional module
    gap_S, gap_phi = _sl11_pair(1, 1, 1, 0)
    gap_line = certify_line_module(
        build_L_h_phi(gap_S, gap_phi, hhat, table), max_degree).passed
    try:
        induced_module_dims(InducedModuleSpec(preset("sl11_Uhat"), table, gap_S, gap_phi), 4)
        gap_reason = None
    except AdmissibilityError as exc:
        gap_reason = str(exc)
    checks.append(_check(
        "homogenized_induced_modules_match_line_modules",
        iso_pass and gap_line and gap_reason is not None,
        fixtures=iso_fixtures,
        line_module_without_induced_counterpart={
            "alpha": 1, "beta": 1, "lambda": 1, "gamma": 0,
            "line_module_pass": gap_line,
            "no_one_dimensional_module": gap_reason,
        },
    ))

    # round trip between pairs and lines
    rng = Random(seed + 13)
    round_trips = 0
    round_pass = True
    for _ in range(1000):
        alpha, beta = _frac(rng), _frac(rng)
        if not alpha and not beta:
            alpha = Fraction(1)
        lam, gamma = _frac(rng), _frac(rng)
        u = (0, 0, 1, -lam)
        v = (alpha, beta, 0, -gamma)
        while True:
            a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
            if a * d - b * c != 0:
                break
        mixed = Line((
            tuple(a * x + b * y for x, y in zip(u, v)),
            tuple(c * x + d * y for x, y in zip(u, v)),
        ))
        S, phi = pair_from_line(mixed, table)
        rebuilt = build_L_h_phi(S, phi, hhat, table).line()
        round_pass = round_pass and (rebuilt == mixed)
        round_trips += 1
    checks.append(_check("pair_line_round_trip", round_pass, round_trips=round_trips))

    # instance checks for the quadric family of line-module lines
    quad = sl11_middle_quadric()
    quad_cases = []
    quad_pass = True
    for s in SL11_QUADRIC_LINE_PARAMS:
        line = Line(((1, 0, -s, 0), (0, -2 * s, 0, 1)))
        on_q = line_on_quadric(line, quad)
        gens = (_deg1((1, 0, -s, 0)), _deg1((0, -2 * s, 0, 1)))
        dims = hilbert_cyclic_left_module(hhat, gens, max_degree)
        ok = on_q and list(dims) == expected
        quad_pass = quad_pass and ok
        quad_cases.append({"s": s, "on_quadric": on_q, "dims": list(dims), "pass": ok})
    checks.append(_check("quadric_family_lines_are_line_modules", quad_pass,
                         cases=quad_cases))

    passed = all(c["pass"] for c in checks)
    return {"suite": "sl11", "checks": checks, "pass": passed}


# ----------------------------------------------------------------------
# slc
# ----------------------------------------------------------------------


_COLOR_FAMILY_OF = {
    # 0-based index i of the basis vector inside the subalgebra -> family
    (2, 1): ("1(a)", "4(a)"), (2, -1): ("1(b)", "4(b)"),
    (1, 1): ("2(a)", "5(a)"), (1, -1): ("2(b)", "5(b)"),
    (0, 1): ("3(a)", "6(a)"), (0, -1): ("3(b)", "6(b)"),
}


def run_slc(samples: int = 10000, seed: int = 0, max_degree: int = 6,
            oracle_degree: int = 4) -> dict:
    checks = []
    table = preset("slc_table")
    H = _system("slc_H", max(8, max_degree))

    checks.append(_two_route_check(
        "hilbert_two_routes_H", "slc_H",
        [_binomial3(d) for d in range(9)], max_degree, oracle_degree))
    u_dims = filtered_cyclic_dims(preset("slc_U"), (), 5)
    pbw_ok = list(u_dims) == [_binomial3(i) for i in range(6)]
    checks.append(_check("pbw_dimension_count_U", pbw_ok, dims=list(u_dims)))

    rep = classify_2dim_subalgebras(table, samples=samples, seed=seed)
    none_graded = all(m["graded"] is False for m in rep.members)
    six = len(rep.members) == 6
    minors = color_minor_identity()
    checks.append(_check(
        "six_subalgebras_none_graded",
        rep.sufficiency_pass and rep.completeness_pass and none_graded and six and minors,
        family=rep.family,
        members=rep.members,
        samples=rep.samples,
        closed_sample_count=rep.closed_sample_count,
        counterexamples=rep.counterexamples,
        rank_identity=minors,
    ))

    # exactly two one-parameter families of admissible functionals, on a
    # half-integer grid, plus route agreement on random functionals
    grid = [Fraction(k, 2) for k in range(-10, 11)]
    rng = Random(seed + 17)
    grid_pass = True
    grid_data = []
    for member in family_members(table):
        i0 = member["params"]["i"] - 1
        mu = member["params"]["mu"]
        S = member["spec"]
        admissible_points = set()
        for x in grid:
            for y in grid:
                ok, _ = closed_form_admissible(S, Functional(x, y), table)
                if ok:
                    admissible_points.add((x, y))
        expected_points = {(x, y) for x in grid for y in grid
                           if y == 0 or x == Fraction(mu, 2)}
        ok = admissible_points == expected_points
        grid_pass = grid_pass and ok
        grid_data.append({
            "i": member["params"]["i"], "mu": mu,
            "admissible_count": len(admissible_points),
            "expected_count": len(expected_points),
            "pass": ok,
        })
        for _ in range(100):
            admissible_functional(S, Functional(_frac(rng), _frac(rng)), table)
    checks.append(_check("two_admissible_families_on_grid", grid_pass,
                         grid=grid_data, random_route_agreement_trials=600))

    # homogenized induced modules and their line families
    iso_fixtures = []
    iso_pass = True
    for member in family_members(table):
        i0 = member["params"]["i"] - 1
        mu = member["params"]["mu"]
        S = member["spec"]
        family_a, family_b = _COLOR_FAMILY_OF[(i0, mu)]
        cases = [("vanishing-on-odd-vector", Functional(c, 0), family_a)
                 for c in (Fraction(0), Fraction(1), Fraction(-2))]
        cases += [("half-mu", Functional(Fraction(mu, 2), c), family_b)
                  for c in (Fraction(0), Fraction(3), Fraction(-1, 2))]
        for tag, phi, family in cases:
            M = build_color_line_module(S, phi, H, table)
            I = InducedModuleSpec(preset("slc_U"), table, S, phi)
            report = certify_homogenization_iso(I, M, 5)
            tags = classify_line_family_color(M.line())
            family_ok = family in tags
            a4_free = torsion_free_on(M, "a4", 5)
            torsion_map = {
                name: torsion_free_on(M, name, 4)
                for name in ("a1", "a2", "a3")
            }
            ok = report.passed and family_ok and a4_free
            iso_pass = iso_pass and ok
            iso_fixtures.append({
                "i": member["params"]["i"], "mu": mu, "family_case": tag,
                "phi": [phi.on_v1, phi.on_v2],
                "induced_dims": list(report.found),
                "line_module_dims": list(report.expected),
                "annihilator_containment": report.details["annihilator_containment"],
                "line_families": tags,
                "expected_family": family,
                "a4_torsion_free": a4_free,
                "torsion_free_map": torsion_map,
                "pass": ok,
            })
    checks.append(_check("homogenized_induced_modules_and_line_families",
                         iso_pass, fixtures=iso_fixtures))

    # sampled membership instances for the thirteen line families
    rng = Random(seed + 19)
    family_cases = []
    family_pass = True
    for tag, plane, point in COLOR_LINE_FAMILIES:
        for _ in range(3):
            line = _random_line_in_plane_through_point(rng, plane, point)
            tags = classify_line_family_color(line)
            ok = tag in tags
            family_pass = family_pass and ok
            family_cases.append({"family": tag, "tags": tags, "pass": ok})
    for _ in range(5):
        line = _random_line_in_plane_through_point(rng, (0, 0, 0, 1), None)
        tags = classify_line_family_color(line)
        ok = "7" in tags
        family_pass = family_pass and ok
        family_cases.append({"family": "7", "tags": tags, "pass": ok})
    checks.append(_check("line_family_membership_instances", family_pass,
                         cases=family_cases))

    passed = all(c["pass"] for c in checks)
    return {"suite": "slc", "checks": checks, "pass": passed}


def _random_line_in_plane_through_point(rng: Random, plane, point) -> Line:
    """A random line inside V(plane), through the given point when one is
    required; the second form is sampled until independent."""
    plane = tuple(Fraction(c) for c in plane)
    while True:
        coeffs = [Fraction(rng.randint(-9, 9)) for _ in range(4)]
        if point is not None:
            value = sum(c * Fraction(p) for c, p in zip(coeffs, point))
            support = [i for i, p in enumerate(point) if p]
            if not support:
                continue
            pivot = support[0]
            coeffs[pivot] -= value / Fraction(point[pivot])
        try:
            return Line((plane, tuple(coeffs)))
        except RankDeficientError:
            continue


# ----------------------------------------------------------------------
# sl21
# ----------------------------------------------------------------------


def run_sl21(samples: int = 10000, seed: int = 0, max_degree: int = 5,
             oracle_degree: int = 3) -> dict:
    checks = []
    pres = preset("sl21_Hhat")
    names = pres.generator_names()
    order = pres.default_order()

    quoted = [
        NcPoly({(2, 4): Fraction(1), (4, 2): Fraction(-1)}),
        NcPoly({(4, 6): Fraction(1), (6, 4): Fraction(1)}),
        NcPoly({(2, 6): Fraction(1), (6, 2): Fraction(-1), (4, 8): Fraction(-1)}),
    ]

    def up_to_scale(a, b):
        if a.support() != b.support():
            return False
        w = next(iter(a.support()))
        return b == a.scale(b.coeff(w) / a.coeff(w))

    quoted_found = [any(up_to_scale(q, r) for r in pres.relations) for q in quoted]
    count_ok = len(pres.relations) == 36
    table_ok = table_consistent_with_presentation(
        preset("sl21_table"),
        system=_system("sl21_Hhat", 5),
        homogenizer=8,
        strict_pairs=True,
    )
    checks.append(_check(
        "presentation_audit", count_ok and all(quoted_found) and table_ok,
        relation_count=len(pres.relations),
        quoted_relations_present=quoted_found,
        bracket_table_consistent=table_ok,
    ))

    system = _system("sl21_Hhat", 5)
    y1sq_t = NcPoly.monomial((4, 4, 8))
    nf_zero = normal_form(y1sq_t, system).is_zero()
    steps = derivation_trace(y1sq_t, system)
    trace_data = [
        {
            "word": format_word(st.word, names),
            "coefficient": st.coefficient,
            "position": st.position,
            "rule": format_word(st.rule_lhs, names),
        }
        for st in steps
    ]
    y1sq = normal_form(NcPoly.monomial((4, 4)), system)
    t_nf = normal_form(NcPoly.gen(8), system)
    factors_nonzero = (not y1sq.is_zero()) and (not t_nf.is_zero())
    derived = [
        {
            "rule": format_word(rec.lhs, names),
            "from_overlap": format_word(rec.overlap_word, names) if rec.overlap_word else None,
        }
        for rec in system.trace
        if rec.source == "overlap"
    ]
    checks.append(_check(
        "zero_divisor_certificate",
        nf_zero and factors_nonzero and len(steps) > 0,
        normal_form_of_y1_y1_t_is_zero=nf_zero,
        y1_squared_normal_form=format_poly(y1sq, names, order),
        t_normal_form=format_poly(t_nf, names, order),
        derivation_trace=trace_data,
        derived_rules=derived,
    ))

    rewrite_dims = hilbert_algebra(system, oracle_degree)
    oracle_dims = oracle_graded_dims(pres, oracle_degree, cap=1000)
    agree = list(rewrite_dims) == list(oracle_dims)
    checks.append(_check(
        "hilbert_two_routes_low_degree", agree,
        rewrite_route=list(rewrite_dims), oracle_route=list(oracle_dims),
    ))

    passed = all(c["pass"] for c in checks)
    return {"suite": "sl21", "checks": checks, "pass": passed}


SUITES = {
    "sl2": run_sl2,
    "sl11": run_sl11,
    "slc": run_slc,
    "sl21": run_sl21,
}


def run_suite(name: str, samples: int = 10000, seed: int = 0, max_degree: int = 6,
              oracle_degree: int = 4) -> dict:
    """Run one named suite, or all of them in order."""
    if name == "all":
        suites = [run_suite(n, samples, seed, max_degree, oracle_degree)
                  for n in ("sl2", "sl11", "slc", "sl21")]
        return {"suite": "all", "suites": suites,
                "pass": all(s["pass"] for s in suites)}
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from sl2, sl11, slc, sl21, all")
    if name == "sl21":
        return run_sl21(samples=samples, seed=seed)
    return SUITES[name](samples=samples, seed=seed, max_degree=max_degree,
                        oracle_degree=oracle_degree)
