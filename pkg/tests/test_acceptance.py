"""Acceptance suite: every stated target is asserted exactly at its stated
tolerance, one test (and one printed pass/fail line) per criterion.

Criteria 6b and 6c assert the stated affine target sets {3,4} and {3,4,5}
as given.  Those two targets are mathematically unattainable: for f > 1
every d+1 vectors of F_{p^f}^d are fixed by a nontrivial automorphism
twist, so the minimum irredundant base size of the semilinear group is
d+2, and the computed sets are {4} and {4,5} (confirmed by an independent
exhaustive oracle at q=4; see README, "Semilinear minimum base size").
They are asserted as stated and fail honestly rather than being weakened.
"""

import random
import time

import pytest

import oracles
from irrbase.affine import AffineParams, build_affine_group
from irrbase.chains import (
    BaseSequence,
    achievable_lengths,
    chain_report,
    min_base_length,
)
from irrbase.perm import PermGroup, induced_pair_action, integers, orbit
from irrbase.realize import GuardExceededError, instantiate, witness_spec
from irrbase.suzuki import witness_base_indices
from irrbase.verify import search_corpus

SEED = 971

def report(criterion: str, ok: bool, detail: str) -> None:
    print(f"\nACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} -- {detail}")


@pytest.fixture(scope="module")
def agammal2_64():
    """AGammaL_2(2^6) on 4096 vectors and its achievable lengths (shared by
    criteria 6c and 7; the heaviest computation in the suite)."""
    t0 = time.perf_counter()
    group, domain = instantiate(witness_spec(4, 5))
    lengths = sorted(achievable_lengths(group).lengths)
    return lengths, time.perf_counter() - t0


def test_criterion_01_suzuki_interval(sz8_params):
    """Sz(8) on 2080 pairs: min 2, max 3, achievable {2, 3}; <= 60 s
    including group construction."""
    from irrbase.suzuki import build_suzuki_group

    t0 = time.perf_counter()
    act = build_suzuki_group(sz8_params, extended=False, action="pairs")
    iv = achievable_lengths(act.group)
    elapsed = time.perf_counter() - t0
    ok = (
        act.domain.size == 2080
        and iv.min_length == 2
        and iv.max_length == 3
        and sorted(iv.lengths) == [2, 3]
        and elapsed <= 60.0
    )
    report("1", ok, f"lengths={sorted(iv.lengths)} b={iv.min_length} I={iv.max_length} ({elapsed:.2f}s)")
    assert ok


def test_criterion_02_suzuki_extended_interval(sz8_params):
    """Extended Sz(8) on pairs: achievable {2, 3, 4}; <= 120 s including
    group construction."""
    from irrbase.suzuki import build_suzuki_group

    t0 = time.perf_counter()
    act = build_suzuki_group(sz8_params, extended=True, action="pairs")
    iv = achievable_lengths(act.group)
    elapsed = time.perf_counter() - t0
    ok = sorted(iv.lengths) == [2, 3, 4] and elapsed <= 120.0
    report("2", ok, f"lengths={sorted(iv.lengths)} ({elapsed:.2f}s)")
    assert ok


def test_criterion_03_reference_chain(sz8_pairs, sz8_closure):
    """Reference chain: strictly decreasing orders; middle stabilizer is
    exactly {identity, involution}; the first pair-stabilizer order is
    computed (14, settling the 2(q+1) vs 2(q-1) discrepancy) and matches a
    brute-force element filter."""
    seq = witness_base_indices(sz8_pairs)
    rep = chain_report(sz8_pairs.group, BaseSequence(sz8_pairs.domain, tuple(seq)))
    strictly_decreasing = rep.all_strict and rep.terminal_trivial

    stab2 = sz8_pairs.group.pointwise_stabilizer(seq[:2])
    w_pair = induced_pair_action(sz8_pairs.ovoid.involution(), sz8_pairs.domain)
    middle = list(stab2.elements())
    middle_ok = stab2.order == 2 and w_pair in middle

    ov = sz8_pairs.ovoid
    zero_idx = ov.point_index(0, 0)
    brute = oracles.setwise_pair_stabilizer(sz8_closure, 0, zero_idx)
    pair_stab_order = rep.orders[1]
    brute_ok = pair_stab_order == len(brute) == 14

    ok = strictly_decreasing and middle_ok and brute_ok and rep.orders == (29120, 14, 2, 1)
    report(
        "3",
        ok,
        f"chain={rep.orders}, middle stabilizer={{id, involution}}: {middle_ok}, "
        f"pair-stabilizer order computed={pair_stab_order} brute-force={len(brute)}",
    )
    assert ok


def test_criterion_04_ovoid_min_base(sz8_delta_ext):
    """Extended Sz(8) on the 65-point ovoid: minimum base size 3; <= 10 s."""
    t0 = time.perf_counter()
    b, wit = min_base_length(sz8_delta_ext.group)
    elapsed = time.perf_counter() - t0
    ok = b == 3 and len(wit) == 3 and elapsed <= 10.0
    report("4", ok, f"b={b} witness={wit.points} ({elapsed:.2f}s)")
    assert ok


def test_criterion_05_double_transitivity(sz8_delta):
    """Sz(8) on the ovoid: a single orbit of ordered distinct pairs (4160)."""
    n = sz8_delta.domain.size
    dom = integers(n * n)
    gens = []
    for g in sz8_delta.group.generators:
        img = [int(g.image[i]) * n + int(g.image[j]) for i in range(n) for j in range(n)]
        gens.append(dom.perm(img))
    orb = orbit(gens, 1)  # the ordered pair (0, 1)
    ok = len(orb) == 4160
    report("5", ok, f"ordered distinct pair orbit size={len(orb)} (target 4160)")
    assert ok


def test_criterion_06a_affine_plain():
    """achievable_lengths(AGL_2(4)) == {3}."""
    act = build_affine_group(AffineParams(d=2, p=2, f=2), extended=False)
    got = sorted(achievable_lengths(act.group).lengths)
    ok = got == [3]
    report("6a", ok, f"AGL_2(4) lengths={got} (target [3])")
    assert ok


def test_criterion_06b_affine_semilinear_q4():
    """Stated target: achievable_lengths(AGammaL_2(4)) == {3, 4}.

    Unattainable: the computed set is {4} (see module docstring); asserted
    as stated, fails honestly."""
    act = build_affine_group(AffineParams(d=2, p=2, f=2), extended=True)
    got = sorted(achievable_lengths(act.group).lengths)
    ok = got == [3, 4]
    report("6b", ok, f"AGammaL_2(4) lengths={got} (stated target [3, 4]; computed minimum is d+2)")
    assert ok, (
        f"stated target [3, 4], computed {got}: no 3-point base of AGammaL_2(4) exists "
        "(every d+1 points admit an automorphism twist); see README"
    )


def test_criterion_06c_affine_semilinear_q64(agammal2_64):
    """Stated target: achievable_lengths(AGammaL_2(2^6)) == {3, 4, 5}; <= 600 s.

    Unattainable for the same reason as 6b: the computed set is {4, 5}."""
    got, elapsed = agammal2_64
    ok = got == [3, 4, 5] and elapsed <= 600.0
    report("6c", ok, f"AGammaL_2(2^6) lengths={got} in {elapsed:.1f}s (stated target [3, 4, 5])")
    assert ok, (
        f"stated target [3, 4, 5], computed {got}: the semilinear minimum is d+2 = 4; see README"
    )


def test_criterion_07_end_to_end_realization(agammal2_64):
    """realize -> instantiate -> achievable_lengths returns exactly X for
    every desk-scale X; guard-refused witnesses are spec-checked only."""
    targets = [(2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 5)]
    details = []
    ok = True
    for a, b in targets:
        expected = list(range(a, b + 1))
        spec = witness_spec(a, b)
        spec_ok = list(spec.expected_lengths) == expected
        try:
            if (a, b) == (4, 5):
                got, _ = agammal2_64  # same witness group, computed once
            else:
                group, _ = instantiate(spec)
                got = sorted(achievable_lengths(group).lengths)
            case_ok = spec_ok and got == expected
            details.append(f"[{a},{b}]->{got}")
        except GuardExceededError:
            case_ok = spec_ok
            details.append(f"[{a},{b}]->guard-refused(spec-checked)")
        ok = ok and case_ok
    report("7", ok, "; ".join(details))
    assert ok


def test_criterion_08_interval_property():
    """Cameron's interval property on >= 100 random subgroups of Sym(n),
    n <= 8: zero violations."""
    rng = random.Random(SEED)
    violations = []
    count = 0
    while count < 100:
        n = rng.randint(4, 8)
        dom = integers(n)
        gens = []
        for _ in range(rng.randint(1, 3)):
            img = list(range(n))
            rng.shuffle(img)
            gens.append(dom.perm(img))
        group = PermGroup(dom, gens)
        if group.order == 1:
            continue
        count += 1
        iv = achievable_lengths(group)
        if not iv.is_interval:
            violations.append((n, [g.cycles() for g in gens]))
    ok = count >= 100 and not violations
    report("8", ok, f"{count} random subgroups checked, violations={len(violations)}")
    assert ok


def test_criterion_09_pruning_oracle():
    """Orbit-representative search equals exhaustive all-sequences search
    on every corpus group (order <= 2000, <= 12 points, >= 30 groups)."""
    corpus = search_corpus()
    discrepancies = []
    for name, group in corpus:
        assert group.order <= 2000 and group.domain.size <= 12
        closure = oracles.mulclose(
            [tuple(p.image.tolist()) for p in group.generators], group.domain.size
        )
        expected = frozenset(oracles.exhaustive_lengths(closure, group.domain.size))
        got = achievable_lengths(group).lengths
        if got != expected:
            discrepancies.append((name, sorted(got), sorted(expected)))
    ok = len(corpus) >= 30 and not discrepancies
    report("9", ok, f"{len(corpus)} corpus groups, discrepancies={discrepancies or 'none'}")
    assert ok


def test_criterion_10_bsgs_order_oracle(sz8_delta, sz8_closure):
    """BSGS order equals brute-force closure enumeration: Sz(8) on the
    ovoid (29120), AGL_1(4) (12), AGammaL_1(4) (24), and 20 random small
    groups."""
    checks = []
    sz_ok = sz8_delta.group.order == len(sz8_closure) == 29120
    checks.append(("Sz(8)", sz8_delta.group.order, len(sz8_closure)))

    agl = build_affine_group(AffineParams(d=1, p=2, f=2), extended=False)
    agl_closure = oracles.mulclose(
        [tuple(p.image.tolist()) for p in agl.group.generators], 4
    )
    agl_ok = agl.group.order == len(agl_closure) == 12
    checks.append(("AGL_1(4)", agl.group.order, len(agl_closure)))

    agml = build_affine_group(AffineParams(d=1, p=2, f=2), extended=True)
    agml_closure = oracles.mulclose(
        [tuple(p.image.tolist()) for p in agml.group.generators], 4
    )
    agml_ok = agml.group.order == len(agml_closure) == 24
    checks.append(("AGammaL_1(4)", agml.group.order, len(agml_closure)))

    rng = random.Random(SEED + 1)
    random_ok = True
    done = 0
    while done < 20:
        n = rng.randint(4, 8)
        dom = integers(n)
        gens = []
        for _ in range(rng.randint(1, 2)):
            img = list(range(n))
            rng.shuffle(img)
            gens.append(dom.perm(img))
        group = PermGroup(dom, gens)
        closure = oracles.mulclose([tuple(p.image.tolist()) for p in group.generators], n)
        if len(closure) > 25000:
            continue
        done += 1
        if group.order != len(closure):
            random_ok = False
    ok = sz_ok and agl_ok and agml_ok and random_ok and done == 20
    report("10", ok, f"named checks={checks}, random groups matched={done}")
    assert ok
