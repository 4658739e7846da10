"""Acceptance suite: eight end-to-end criteria checked against independent oracles.

Each ``criterion_*`` function returns ``(passed, detail)``.  The pytest wrappers
record the outcome so ``conftest.py`` can print one PASS/FAIL line per
criterion; running this file directly prints the same lines.
"""
import random
import sys
import time
from fractions import Fraction as Q
from itertools import combinations

import pytest

from nervekit.classify import Status, classify, overlap_audit
from nervekit.complex import helly_fill, suspension
from nervekit.geometry import affine_dimension, contains
from nervekit.lifting import lift_suspension, project_suspension
from nervekit.nerve import (Certificate, certificate_from_realization, check_helly_type,
                            face_key, full_nerve, nerve_skeleton, realize_certificate,
                            transform_family, verify_certificate)
from nervekit.oracle import (GeneratorConfig, all_complexes, brute_interval_decide,
                             brute_nerve, random_complex, random_family)
from nervekit.recognize import decide_R_k11

RESULTS: dict[str, tuple[bool, str]] = {}


# ----------------------------------------------------------------- families

def mixed_families(count=200, seed0=1000):
    """Seeded families with n <= 7, d <= 3 and a mix of flat dimensions."""
    out = []
    for i in range(count):
        rng = random.Random(seed0 + i)
        d = rng.randint(1, 3)
        flat = rng.choice([None] + list(range(d + 1)))
        out.append(random_family(GeneratorConfig(
            seed=seed0 + i, count=rng.randint(1, 7), ambient_dim=d, flat_dim=flat,
            flat_pool=rng.choice([None, 1, 2, 3]), anchor=rng.random() < 0.3)))
    return out


def low_flat_families(count=200, seed0=5000):
    """Seeded families whose members lie in flats of dimension j < d, d <= 3."""
    out = []
    for i in range(count):
        rng = random.Random(seed0 + i)
        d = rng.randint(1, 3)
        j = rng.randint(0, d - 1)
        F = random_family(GeneratorConfig(
            seed=seed0 + i, count=rng.randint(2, 6), ambient_dim=d, flat_dim=j,
            flat_pool=rng.choice([None, 1, 2]), anchor=rng.random() < 0.5))
        out.append((j, F))
    return out


# ----------------------------------------------------------------- criteria

def criterion_1():
    fams = mixed_families()
    bad = sum(full_nerve(F) != brute_nerve(F) for F in fams)
    return bad == 0, f"{len(fams)} families, {bad} mismatches"


def criterion_2():
    fams = mixed_families()
    bad = sum(full_nerve(F) != helly_fill(nerve_skeleton(F, F.ambient_dim), F.ambient_dim + 1)
              for F in fams)
    return bad == 0, f"{len(fams)} families, {bad} mismatches"


def criterion_3():
    cases = low_flat_families()
    premises = violations = bad_rebuild = 0
    for j, F in cases:
        rep = check_helly_type(F, j)
        premises += rep.premise_holds
        violations += rep.premise_holds and not rep.conclusion_holds
        bad_rebuild += not rep.reconstruction_ok
    ok = violations == 0 and bad_rebuild == 0 and premises > 0
    return ok, (f"{len(cases)} families, premise held in {premises}, "
                f"{violations} implication violations, {bad_rebuild} reconstruction failures")


def criterion_4():
    bad = 0
    for i in range(50):
        rng = random.Random(9000 + i)
        d = rng.randint(1, 2)
        j = rng.choice([d - 1, d])
        F = random_family(GeneratorConfig(seed=9000 + i, count=rng.randint(1, 5), ambient_dim=d,
                                          flat_dim=j, exact_dim=True,
                                          flat_pool=rng.choice([None, 1, 2])))
        N = full_nerve(F)
        L = lift_suspension(F, j, "a", "b")
        P = project_suspension(L, "a", "b")
        if full_nerve(L) != suspension(N, "a", "b") or full_nerve(P) != N:
            bad += 1
    return bad == 0, f"50 realizations, {bad} failures"


def criterion_5():
    cases = [(K, k) for n in range(1, 5) for K in all_complexes(n) for k in (1, 2, 3)]
    rng = random.Random(2024)
    cases += [(random_complex(rng, 5), rng.randint(1, 3)) for _ in range(100)]
    disagree = bad_witness = yes = 0
    for K, k in cases:
        dec = decide_R_k11(K, k)
        disagree += dec.answer != brute_interval_decide(K, k)
        if dec.answer:
            yes += 1
            bad_witness += nerve_skeleton(dec.witness, k) != K
    ok = disagree == 0 and bad_witness == 0
    return ok, (f"{len(cases)} instances ({yes} yes), {disagree} disagreements, "
                f"{bad_witness} bad witnesses")


def criterion_6():
    facts = []
    facts += [((k, 1, 1), Status.Polynomial) for k in range(1, 7)]
    facts += [((k, 1, d), Status.ExistsRComplete) for k in range(1, 5) for d in range(2, 7)]
    facts += [((k, 2, 2), Status.ExistsRComplete) for k in range(1, 5)]
    facts += [((k, j, d), Status.ExistsRComplete)
              for k in range(2, 7) for d in range(2, k + 1) for j in (d - 1, d)]
    facts += [((1, 2, 3), Status.Trivial)]
    facts += [((k, 2 * k + 1, 2 * k + 1), Status.Trivial) for k in range(1, 4)]
    for d in range(1, 9):
        for j in range(1, d + 1):
            if j == d == 1:
                want = Status.Polynomial
            elif j == 1 or j == d == 2:
                want = Status.ExistsRComplete
            else:
                want = Status.Trivial
            facts.append(((1, j, d), want))
    deviations = [kjd for kjd, want in facts if classify(*kjd).status is not want]
    overlaps = overlap_audit(12, 12)
    ok = not deviations and not overlaps
    return ok, (f"{len(facts)} facts, {len(deviations)} deviations, "
                f"{len(overlaps)} rule overlaps")


def _mutation(F, K, k, cert):
    """A certificate with one face point moved into a set it must avoid.

    The point of maximal face m is replaced by a point p already in the
    rebuilt set of some x outside m, chosen so that {x} with some g <= m,
    |g| <= k, is not a face of K.  The rebuilt sets of x and of all of g then
    share p, which adds a forbidden face of size at most k+1.
    """
    rebuilt = realize_certificate(K, F.ambient_dim, cert)
    for m in K.maximal_faces:
        for x in K.vertices:
            if x in m:
                continue
            g = next((g for s in range(1, min(k, len(m)) + 1) for g in combinations(m, s)
                      if not K.is_face(g + (x,))), None)
            if g is None:
                continue
            for n in K.maximal_faces:
                if x in n:
                    p = cert.face_points[face_key(n)]
                    assert contains(rebuilt[x], p)
                    assert not all(contains(F[v], p) for v in m)
                    pts = dict(cert.face_points)
                    pts[face_key(m)] = p
                    return Certificate(pts, cert.padding_points)
    return None


def criterion_7():
    accepted = rejected = seeds = 0
    seed = 700
    while seeds < 50:
        seed += 1
        rng = random.Random(seed)
        d = rng.randint(1, 2)
        k = rng.randint(1, 2)
        F = random_family(GeneratorConfig(seed=seed, count=rng.randint(3, 6), ambient_dim=d,
                                          flat_dim=1, exact_dim=True,
                                          flat_pool=None if d == 1 else rng.choice([1, 2, 3])))
        K = nerve_skeleton(F, k)
        cert = certificate_from_realization(F, K, j=1)
        bad = _mutation(F, K, k, cert)
        if bad is None:
            continue
        seeds += 1
        accepted += bool(verify_certificate(K, k, 1, d, cert))
        rejected += not verify_certificate(K, k, 1, d, bad)
    ok = accepted == seeds and rejected == seeds
    return ok, f"{seeds} realizations, {accepted} accepted, {rejected} mutations rejected"


def criterion_8():
    bad = 0
    fams = mixed_families(count=100, seed0=3000)
    for F in fams:
        d = F.ambient_dim
        G = transform_family(F, Q(7, 3), [Q(1, 5)] * d)
        same = full_nerve(F) == full_nerve(G)
        same &= all(nerve_skeleton(F, k) == nerve_skeleton(G, k) for k in (1, 2))
        j = max(affine_dimension(p) for _, p in F.members)
        same &= check_helly_type(F, j) == check_helly_type(G, j)
        bad += not same
    return bad == 0, f"{len(fams)} families, {bad} changed outputs"


CRITERIA = {
    "1 oracle equivalence": criterion_1,
    "2 Helly reconstruction": criterion_2,
    "3 Helly-type theorem harness": criterion_3,
    "4 suspension lift and projection": criterion_4,
    "5 R(k,1,1) decider": criterion_5,
    "6 classifier fidelity": criterion_6,
    "7 certificate verifier": criterion_7,
    "8 exactness under affine maps": criterion_8,
}


def run_criterion(name):
    t0 = time.perf_counter()
    ok, detail = CRITERIA[name]()
    RESULTS[name] = (ok, f"{detail} ({time.perf_counter() - t0:.1f}s)")
    return ok, detail


@pytest.mark.parametrize("name", list(CRITERIA))
def test_criterion(name):
    ok, detail = run_criterion(name)
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for name in CRITERIA:
        ok, _ = run_criterion(name)
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} criterion {name}: {RESULTS[name][1]}")
    sys.exit(1 if failed else 0)
