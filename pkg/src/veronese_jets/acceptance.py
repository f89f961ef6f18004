"""End-to-end acceptance checks tying every component together.

Each criterion returns (ok, detail) and exercises one of the headline
facts at desk scale with exact arithmetic: the four descriptions of the
reduced jet quotient agree, relation coefficients die under substitution,
fibers of the module family have constant dimension, the generator closure
reproduces the closed-form characters, the supernomial tables specialize
correctly, the fusion filtration matches, and the symmetric identities and
derivation laws behind the module structure hold.
"""

import time
from fractions import Fraction
from math import comb

from .characters import (
    _compositions,
    demazure_character,
    demazure_level_vector,
    demazure_qdegree_bound,
    global_demazure_character,
    hilbert_leading_quotient,
    supernomial,
)
from .errors import StabilizationError
from .jets import (
    JetRingSpec,
    kernel_membership,
    quadratic_relations,
    quotient_character,
    verify_reduced,
)
from .modules import (
    ModuleSpec,
    build_global_demazure,
    cartan_product_law_check,
    default_fiber_qmax,
    demazure_relation_check,
    fiber_dimension,
    fusion_character,
    operator_closure_report,
)
from .poly import x_series
from .symfun import (
    elementary_z,
    expand_power_sums,
    newton_to_elementary,
    omitted_elementary_products,
    to_power_sums,
)


def criterion_reduced_quotients(workers=None):
    """Quadratic quotient = kernel quotient = closed-form character =
    composition Hilbert sum, for l in {2, 3}, n <= 3, qmax = 6."""
    for l in (2, 3):
        rep = verify_reduced(l, 3, 6, workers)
        if not rep["ok"]:
            for rn in rep["results"]:
                for entry in rn["compared"]:
                    if not entry["match"]:
                        return False, "mismatch at l=%d n=%d weight=%d k=%d: %r" % (
                            l,
                            rn["n"],
                            entry["weight"],
                            entry["k"],
                            entry,
                        )
    return True, "four characters agree for l in {2,3}, n <= 3, qmax = 6"


def criterion_kernel_membership(workers=None):
    """Every quadratic relation coefficient maps to zero under the
    substitution, l <= 4, t-order <= 8."""
    total = 0
    for l in range(1, 5):
        spec = JetRingSpec.make(l, 2, 8)
        order = 8 + l
        for g in quadratic_relations(spec):
            if not kernel_membership(g.poly, l, order):
                return False, "nonzero image at l=%d (s,r,w,k)=(%d,%d,%d,%d)" % (
                    l,
                    g.s,
                    g.r,
                    g.w,
                    g.k,
                )
            total += 1
    return True, "%d relation coefficients map to zero for l <= 4, t-order <= 8" % total


def criterion_fiber_dimensions(workers=None):
    """Fibers over the origin, a generic point, a fixed rational point and a
    collision point all have dimension (l+1)^n, l <= 3, n <= 3."""
    checked = 0
    for l in range(1, 4):
        for n in range(1, 4):
            spec = ModuleSpec.make(l, n, default_fiber_qmax(l, n))
            basis = build_global_demazure(spec)
            pts = [
                (Fraction(0),) * n,
                tuple(Fraction(j) for j in range(n)),
                (Fraction(3, 2), Fraction(-1, 3), Fraction(5, 7))[:n],
                (Fraction(1),) * n,
            ]
            for pt in dict.fromkeys(pts):
                rep = fiber_dimension(spec, pt, basis)
                if rep.total != (l + 1) ** n:
                    return False, "fiber at %s has dimension %d != %d (l=%d n=%d)" % (
                        pt,
                        rep.total,
                        (l + 1) ** n,
                        l,
                        n,
                    )
                checked += 1
    return True, "%d fibers all have dimension (l+1)^n for l <= 3, n <= 3" % checked


def criterion_closure_character(workers=None):
    """The generator closure has exactly the closed-form character,
    l <= 3, n <= 3, qmax = 6."""
    for l in range(1, 4):
        for n in range(4):
            basis = build_global_demazure(ModuleSpec.make(l, n, 6))
            if basis.character() != global_demazure_character(l, n, 6):
                return False, "character mismatch at l=%d n=%d" % (l, n)
    return True, "closure character equals the closed form for l <= 3, n <= 3, qmax = 6"


def criterion_supernomial_sum(workers=None):
    """Supernomial weights specialize at q=1 to a total of (l+1)^n and are
    supported on the correct parity and range, l <= 4, n <= 4."""
    for l in range(1, 5):
        for n in range(1, 5):
            levels = demazure_level_vector(l, n)
            qmax = demazure_qdegree_bound(l, n)
            total = 0
            for a in range(-l * n - 2, l * n + 3):
                s = supernomial(levels, a, qmax)
                if abs(a) > l * n or (a - l * n) % 2:
                    if not s.is_zero():
                        return False, "support violation at l=%d n=%d a=%d" % (l, n, a)
                    continue
                total += s.at_one()
            if total != (l + 1) ** n:
                return False, "q=1 total %s != %d at l=%d n=%d" % (
                    total,
                    (l + 1) ** n,
                    l,
                    n,
                )
    return True, "supernomial q=1 totals and support correct for l <= 4, n <= 4"


def criterion_hilbert_matches(workers=None):
    """The composition Hilbert sum equals the closed-form character,
    l <= 4, n <= 4, qmax = 8."""
    for l in range(1, 5):
        for n in range(5):
            if hilbert_leading_quotient(l, n, 8) != global_demazure_character(l, n, 8):
                return False, "series mismatch at l=%d n=%d" % (l, n)
    return True, "Hilbert composition sum equals the closed form for l <= 4, n <= 4, qmax = 8"


def criterion_fusion_character(workers=None):
    """The fusion filtration character is independent of the evaluation
    points and equals the closed form, l <= 2, n <= 3, three point sets."""
    for l in (1, 2):
        for n in (1, 2, 3):
            qmax = demazure_qdegree_bound(l, n)
            want = demazure_character(l, n, qmax)
            point_sets = [
                tuple(Fraction(j) for j in range(n)),
                (Fraction(1, 2), Fraction(-1, 3), Fraction(3, 4))[:n],
                (Fraction(-2), Fraction(5), Fraction(11))[:n],
            ]
            for pts in point_sets:
                got = fusion_character((l,) * n, pts, qmax)
                if got != want:
                    return False, "character mismatch at l=%d n=%d points=%s" % (l, n, pts)
    return True, "fusion character equals the closed form on 3 point sets, l <= 2, n <= 3"


def criterion_symmetric_identities(workers=None):
    """Generator identities, Newton roundtrips and omitted-product
    power-sum roundtrips, l <= 3, n <= 4."""
    for l in range(1, 4):
        for n in range(1, 5):
            rep = demazure_relation_check(l, n)
            if not rep["ok"]:
                return False, "identity failure at l=%d n=%d: %r" % (l, n, rep)
    for n in range(1, 5):
        for j in range(1, n + 1):
            if expand_power_sums(newton_to_elementary(j), n) != elementary_z(j, n):
                return False, "Newton roundtrip failed at n=%d j=%d" % (n, j)
    for l in range(1, 4):
        for n in range(1, 5):
            for mu in _compositions(l + 1, n):
                f = omitted_elementary_products(mu, n)
                if expand_power_sums(to_power_sums(f, n), n) != f:
                    return False, "power-sum roundtrip failed at n=%d mu=%s" % (n, mu)
    return True, "identities and power-sum roundtrips hold for l <= 3, n <= 4"


def criterion_derivation_laws(workers=None):
    """Operator closure of the module basis, the product law for the Cartan
    currents, the t-series Leibniz rule, and the leading-term quotient
    dominating the quadratic quotient piecewise."""
    for l in range(1, 4):
        for n in range(1, 4):
            basis = build_global_demazure(ModuleSpec.make(l, n, 4))
            rep = operator_closure_report(basis)
            if not rep["ok"]:
                return False, "operator closure failed at l=%d n=%d: %r" % (
                    l,
                    n,
                    rep["failures"][:3],
                )
            if not cartan_product_law_check(l, n, 5):
                return False, "Cartan product law failed at l=%d n=%d" % (l, n)
    for order, w in ((6, 1), (6, 2), (5, 3)):
        f = x_series(0, order + w)
        g = x_series(1, order + w)
        lhs = (f * g).derivative(w)
        rhs = None
        for m in range(w + 1):
            term = f.derivative(m) * g.derivative(w - m) * comb(w, m)
            rhs = term if rhs is None else rhs + term
        for k in range(order + 1):
            if lhs.coefficient(k) != rhs.coefficient(k):
                return False, "Leibniz rule failed at w=%d k=%d" % (w, k)
    for l in (2, 3):
        for n in range(1, 4):
            spec = JetRingSpec.make(l, n, 5)
            lead = quotient_character(spec, "leading", workers)
            quad = quotient_character(spec, "quadratic", workers)
            if not lead.dominates(quad):
                return False, "leading quotient smaller than quadratic at l=%d n=%d" % (l, n)
    return True, "derivation laws and leading-term bounds hold"


CRITERIA = [
    ("reduced_quotient_characters", criterion_reduced_quotients),
    ("relation_kernel_membership", criterion_kernel_membership),
    ("fiber_dimensions_constant", criterion_fiber_dimensions),
    ("closure_matches_character", criterion_closure_character),
    ("supernomial_specialization", criterion_supernomial_sum),
    ("hilbert_matches_character", criterion_hilbert_matches),
    ("fusion_matches_character", criterion_fusion_character),
    ("symmetric_identities", criterion_symmetric_identities),
    ("derivation_laws", criterion_derivation_laws),
]


def run_all(workers=None, names=None):
    """Run the acceptance criteria; returns [{name, ok, detail, ms}].

    A StabilizationError inside a criterion marks it inconclusive rather
    than failed; the caller decides how to surface that.
    """
    results = []
    for name, fn in CRITERIA:
        if names is not None and name not in names:
            continue
        start = time.perf_counter()
        try:
            ok, detail = fn(workers)
            status = "pass" if ok else "fail"
        except StabilizationError as err:
            status, detail = "inconclusive", str(err)
        ms = int((time.perf_counter() - start) * 1000)
        results.append({"name": name, "status": status, "detail": detail, "ms": ms})
    return results
