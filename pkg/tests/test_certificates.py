import json

import pytest

from veechlab import perms
from veechlab.certificates import (
    certify_minus_identity,
    certify_pullback_obstruction,
    certify_rotation_obstruction,
    certify_shear,
    certify_sigma_T,
    mutated_monodromy,
    revalidate,
    sigma_T_claim,
    verify_theorem,
)
from veechlab.covering import Monodromy, build_cover, sigma_d1, sigma_d2, standard_monodromy
from veechlab.field import RealAlg, lambda_n


def test_certify_shear_y53():
    cover = build_cover(5, 3)
    cert = certify_shear(cover, 1)
    assert cert.verdict == "pass"
    twists = {row["twists"] for row in cert.payload["cylinders"]}
    assert twists <= {1, 2}


def test_certify_shear_y82_odd_direction():
    cert = certify_shear(build_cover(8, 2), 3)
    assert cert.verdict == "pass"


def test_certify_shear_y52_horizontal():
    # all horizontal cylinders of Y_{5,2} have inverse modulus lambda;
    # the factor-2*lambda certificate passes with two twists everywhere
    cover = build_cover(5, 2)
    lam = lambda_n(5)
    cert = certify_shear(cover, 0)
    assert cert.verdict == "pass"
    for row in cert.payload["cylinders"]:
        assert RealAlg.from_json(row["inverse_modulus"]) == lam
        assert row["twists"] == 2
    # a single twist at factor lambda also happens to close for d = 2,
    # but at d = 3 the big horizontal cylinder breaks it
    cert3 = certify_shear(build_cover(5, 3), 0, factor=lam)
    assert cert3.verdict == "fail"


def test_rotation_obstruction_y53():
    cover = build_cover(5, 3)
    lam3 = 3 * lambda_n(5)
    for l in range(1, 5):
        cert = certify_rotation_obstruction(cover, l)
        assert cert.verdict == "pass"
        mods = {RealAlg.from_json(e["inverse_modulus"]).key() for e in cert.payload["direction"]}
        assert lam3.key() not in mods  # no d*lambda cylinder off-horizontal


def test_rotation_obstruction_y52_witness():
    cover = build_cover(5, 2)
    cert = certify_rotation_obstruction(cover, 1)
    assert cert.verdict == "pass"
    wit = RealAlg.from_json(cert.witness["inverse_modulus"])
    assert wit == 2 * lambda_n(5)


def test_rotation_obstruction_d4_parallel_heights():
    # v_l parallel to a marked edge: moduli agree, heights differ
    n, d = 5, 4
    cover = build_cover(n, d)
    # directions parallel to x_k1 / x_k2: l with edge index match
    k1, k2 = cover.monodromy.k1, cover.monodromy.k2
    parallel = [(2 * k1) % n, (2 * k2) % n]  # v_{2j mod n} is parallel to x_j
    for l in parallel:
        if l == 0:
            continue
        cert = certify_rotation_obstruction(cover, l)
        assert cert.verdict == "pass"
        h_mods = sorted(e["inverse_modulus"]["approx"] for e in cert.payload["horizontal"])
        d_mods = sorted(e["inverse_modulus"]["approx"] for e in cert.payload["direction"])
        assert h_mods == d_mods  # moduli multisets agree; heights decide


def test_sigma_T_claims():
    assert sigma_T_claim(4) == perms.from_cycles(4, [(1, 3)])
    assert sigma_T_claim(2) == perms.identity(2)
    # d = 5: the square of the core monodromy cycle, composed independently
    core5 = perms.from_cycles(5, [(0, 2, 4, 3, 1)])
    assert sigma_T_claim(5) == perms.compose(core5, core5)
    assert sigma_T_claim(5) == perms.from_cycles(5, [(0, 4, 1, 2, 3)])


@pytest.mark.parametrize("d", range(2, 9))
def test_sigma_T_conditions_hold(d):
    for n in (5, 8):
        cert = certify_sigma_T(n, d, "horizontal")
        assert cert.verdict == "pass"
    for n in (8, 10):
        cert = certify_sigma_T(n, d, "vertical")
        assert cert.verdict == "pass"


def test_minus_identity_certificates():
    for d in range(2, 9):
        assert certify_minus_identity(build_cover(5, d)).verdict == "pass"
    # a 3-cycle image is not an involution
    bad = Monodromy(4, 3, {2: perms.from_cycles(3, [(0, 1, 2)]), 3: sigma_d2(3)}, k1=2, k2=3)
    cover = build_cover(5, 3, bad)
    cert = certify_minus_identity(cover)
    assert cert.verdict == "fail"
    assert cert.witness["generator"] == 2


def test_verify_theorem_examples():
    assert verify_theorem(5, 3).verdict == "pass"
    assert verify_theorem(8, 2).verdict == "pass"
    inf5 = verify_theorem(5, infinite=True)
    assert inf5.verdict == "pass"
    assert inf5.payload["infinite_preimages_of_cylinder_k"] == 2


@pytest.mark.parametrize("n,dmax", [(5, 8), (7, 8), (9, 8), (8, 6), (10, 6)])
def test_verify_theorem_grid(n, dmax):
    for d in range(2, dmax + 1):
        assert verify_theorem(n, d).verdict == "pass"


@pytest.mark.parametrize("n,dmax", [(5, 8), (7, 8), (9, 8), (8, 6), (10, 6)])
def test_mutations_fail(n, dmax):
    for d in range(2, dmax + 1):
        cert = verify_theorem(n, d, monodromy=mutated_monodromy(n, d))
        assert cert.verdict == "fail", (n, d)


def test_mutation_failure_modes():
    # d = 2: the dropped transposition breaks the twist conditions;
    # d = 3: the mutated cover disconnects; d >= 4: -I fails
    cert2 = verify_theorem(5, 2, monodromy=mutated_monodromy(5, 2))
    assert cert2.witness["failed"] == "SigmaT"
    cert3 = verify_theorem(5, 3, monodromy=mutated_monodromy(5, 3))
    assert cert3.witness["failed"] == "WellFormedCover"
    cert4 = verify_theorem(5, 4, monodromy=mutated_monodromy(5, 4))
    kinds = {s["kind"]: s["verdict"] for s in cert4.payload["subcertificates"]}
    assert kinds.get("MinusIdentity") == "fail"


def test_pullback_obstruction_resolves_d2_vertical():
    # (inverse modulus, height) multisets agree for n=0 mod 4, d=2 in the
    # vertical direction; the covering-structure obstruction decides
    cover = build_cover(8, 2)
    multiset = certify_rotation_obstruction(cover, 4)
    assert multiset.verdict == "inconclusive"
    pullback = certify_pullback_obstruction(8, cover.monodromy, 4)
    assert pullback.verdict == "pass"
    assert verify_theorem(8, 2).verdict == "pass"


def test_pullback_obstruction_consistent_across_grid():
    # the rotation lift never exists for the standard family, so the
    # covering-structure obstruction must agree wherever multisets decide
    for n in (8, 12):
        for d in (2, 3, 4):
            mono = standard_monodromy(n, d)
            for l in range(2, n, 2):
                cert = certify_pullback_obstruction(n, mono, l)
                assert cert.verdict == "pass", (n, d, l)
            # the full turn R^n = -I is in the group: pullback by it is
            # the cover itself (generator images are involutions)
            full = certify_pullback_obstruction(n, mono, n)
            assert full.verdict == "inconclusive"


def test_pullback_inconclusive_for_symmetric_cover():
    # a cover invariant under the rotation: pullback gives no obstruction
    n, d = 8, 2
    images = {i: sigma_d1(2) for i in range(4)}  # all generators swap sheets
    mono = Monodromy(4, d, images, k1=1, k2=2)
    cert = certify_pullback_obstruction(n, mono, 2)
    assert cert.verdict == "inconclusive"


def test_certificates_revalidate_from_payload():
    for cert in (
        certify_shear(build_cover(5, 3), 1),
        certify_rotation_obstruction(build_cover(5, 4), 2),
        certify_sigma_T(5, 5, "horizontal"),
        certify_minus_identity(build_cover(8, 3)),
        verify_theorem(5, 3),
        verify_theorem(8, 2),
        verify_theorem(5, infinite=True),
    ):
        data = json.loads(json.dumps(cert.to_json()))
        assert revalidate(data) == cert.verdict


def test_tampered_payload_fails_revalidation():
    cert = certify_shear(build_cover(5, 3), 1)
    data = json.loads(json.dumps(cert.to_json()))
    data["payload"]["cylinders"][0]["twists"] = 7
    assert revalidate(data) == "fail"


@pytest.mark.parametrize("n", [5, 7, 9])
def test_obstruction_height_facts(n):
    # the two heights behind the d = 4 obstruction, as exact field elements
    from veechlab.cylinders import closed_form_base, cylinder_count_base
    from veechlab.field import quarter_trig, sin_pi_over

    k1 = (n - 1) // 2
    h_k1 = closed_form_base(n, k1)[0]
    h_1 = closed_form_base(n, 1)[0]
    s1 = sin_pi_over(n)
    _, s_n2 = quarter_trig(n, 2 * (n - 2))
    assert h_k1 == 2 * s1 * s1
    assert h_1 == 2 * s_n2 * s1
    diff = h_k1 - h_1
    assert diff.sign() != 0
    # product form of the difference (prosthaphaeresis); the displayed
    # version drops a factor 2
    c_half, _ = quarter_trig(n, n - 1)
    _, s_half = quarter_trig(n, 3 - n)
    assert diff == 4 * s1 * c_half * s_half


def test_verify_rejects_bad_degree():
    with pytest.raises(ValueError):
        verify_theorem(5, 0)
    with pytest.raises(ValueError):
        verify_theorem(5)
