import pytest

import oracle
from fences import (
    ANTICHAIN,
    IDEAL,
    FenceError,
    RoleError,
    antichain_orbits,
    build_fence,
    count_ideals,
    ideal_complement,
    ideal_orbits,
    orbit_of,
    rowmotion,
    rowmotion_inverse,
    superorbits,
)
from fences.harness import all_fence_compositions


def orbit_sizes(orbits):
    return sorted(o.size for o in orbits)


class TestRho:
    def test_v_cycle(self, f22):
        A = f22.element_set([], ANTICHAIN)
        seq = [set(A.elements)]
        for _ in range(3):
            A = rowmotion(f22, A)
            seq.append(set(A.elements))
        assert seq == [set(), {1, 3}, {2}, set()]

    def test_v_two_cycle(self, f22):
        A = f22.element_set([1], ANTICHAIN)
        assert set(rowmotion(f22, A).elements) == {3}

    def test_434_five_cycle(self, f434):
        expected = [set(), {1, 7}, {2, 6, 8}, {3, 5, 9}, {4, 10}, set()]
        A = f434.element_set([], ANTICHAIN)
        got = [set(A.elements)]
        for _ in range(5):
            A = rowmotion(f434, A)
            got.append(set(A.elements))
        assert got == expected

    def test_matches_oracle(self):
        for alpha in [(2, 2), (3, 3, 2), (2, 2, 2), (2, 1, 1, 2)]:
            F = build_fence(alpha)
            for m in F.antichain_masks():
                A = F.set_from_mask(m, ANTICHAIN)
                got = frozenset(rowmotion(F, A).elements)
                assert got == oracle.brute_rho(F, frozenset(A.elements))

    def test_inverse(self):
        for alpha in [(2, 2), (4, 3, 4), (2, 2, 2)]:
            F = build_fence(alpha)
            for m in F.antichain_masks():
                A = F.set_from_mask(m, ANTICHAIN)
                assert rowmotion_inverse(F, rowmotion(F, A)) == A
            for m in F.ideal_masks():
                I = F.set_from_mask(m, IDEAL)
                assert rowmotion_inverse(F, rowmotion(F, I)) == I

    def test_role_mismatch(self, f434):
        from fences import UPPER

        U = f434.element_set([4], UPPER)  # x4 is maximal, so {x4} is upward closed
        with pytest.raises(RoleError):
            rowmotion(f434, U)

    def test_bijective_small_sweep(self):
        # rowmotion is injective on both families, every fence n <= 14
        for alpha in all_fence_compositions(14):
            F = build_fence(alpha)
            amasks = F.antichain_masks()
            from fences.rowmotion import _rho_hat_mask, _rho_mask

            assert len({_rho_mask(F, m) for m in amasks}) == len(amasks)
            imasks = F.ideal_masks()
            assert len({_rho_hat_mask(F, m) for m in imasks}) == len(imasks)


class TestRhoHat:
    def test_v_cycles(self, f22):
        I = f22.element_set([], IDEAL)
        seq = [set(I.elements)]
        for _ in range(3):
            I = rowmotion(f22, I)
            seq.append(set(I.elements))
        assert seq == [set(), {1, 3}, {1, 2, 3}, set()]
        J = f22.element_set([1], IDEAL)
        assert set(rowmotion(f22, J).elements) == {3}

    def test_full_maps_to_empty(self, f434):
        full = f434.element_set(range(1, 11), IDEAL)
        assert rowmotion(f434, full).mask == 0

    def test_matches_oracle(self):
        for alpha in [(2, 2), (3, 3, 2), (2, 2, 2)]:
            F = build_fence(alpha)
            for m in F.ideal_masks():
                I = F.set_from_mask(m, IDEAL)
                got = frozenset(rowmotion(F, I).elements)
                assert got == oracle.brute_rho_hat(F, frozenset(I.elements))


class TestOrbits:
    @pytest.mark.parametrize(
        "alpha,sizes",
        [
            ((4, 3, 4), [5, 17, 17, 17]),
            ((5, 4), [21]),
            ((2, 2), [2, 3]),
        ],
    )
    def test_antichain_orbit_sizes(self, alpha, sizes):
        assert orbit_sizes(antichain_orbits(build_fence(alpha))) == sizes

    @pytest.mark.parametrize(
        "alpha,sizes",
        [((4, 3, 4), [5, 17, 17, 17]), ((2, 2), [2, 3]), ((5, 4), [21])],
    )
    def test_ideal_orbit_sizes(self, alpha, sizes):
        assert orbit_sizes(ideal_orbits(build_fence(alpha))) == sizes

    def test_orbit_size_multisets_coincide(self):
        for alpha in all_fence_compositions(10):
            F = build_fence(alpha)
            assert orbit_sizes(antichain_orbits(F)) == orbit_sizes(
                ideal_orbits(F)
            ), alpha

    def test_sizes_sum_to_family_count(self):
        for alpha in all_fence_compositions(10):
            F = build_fence(alpha)
            assert sum(o.size for o in antichain_orbits(F)) == count_ideals(alpha)

    def test_canonical_order(self, f434):
        orbits = antichain_orbits(f434)
        reps = [o.representative.mask for o in orbits]
        assert reps == sorted(reps)
        for o in orbits:
            assert o.representative.mask == min(o.masks)

    def test_consecutive_under_rho(self, f434):
        for o in antichain_orbits(f434):
            for i, S in enumerate(o.reps):
                assert rowmotion(f434, S) == o.reps[(i + 1) % o.size]

    def test_orbit_of(self, f434):
        A = f434.element_set([4, 10], ANTICHAIN)
        o = orbit_of(f434, A)
        assert o.size == 5 and o.representative.mask == 0

    def test_matches_oracle_orbits(self):
        for alpha in [(2, 2), (2, 2, 2), (3, 3, 2)]:
            F = build_fence(alpha)
            fam = set(oracle.brute_antichains(F))
            brute = oracle.brute_orbits(F, fam, oracle.brute_rho)
            assert sorted(len(x) for x in brute) == orbit_sizes(
                antichain_orbits(F)
            )


class TestIdealComplement:
    def test_fig4_example(self):
        F = build_fence((3, 3, 3))
        I = F.element_set([1, 4, 5, 6], IDEAL)
        assert set(ideal_complement(F, I).elements) == {1, 2, 6, 7}

    def test_empty(self, f222):
        empty = f222.element_set([], IDEAL)
        assert set(ideal_complement(f222, empty).elements) == {1, 2, 3, 4, 5}

    def test_involution(self):
        for alpha in [(3, 3, 3), (2, 2, 2), (2, 1, 2, 1, 2)]:
            F = build_fence(alpha)
            for m in F.ideal_masks():
                I = F.set_from_mask(m, IDEAL)
                assert ideal_complement(F, ideal_complement(F, I)) == I

    def test_unavailable_without_duality(self, f22):
        with pytest.raises(FenceError):
            ideal_complement(f22, f22.element_set([], IDEAL))

    def test_commutes_with_inverse_rowmotion(self):
        # complement of the image equals the inverse image of the complement,
        # for every self-dual fence with n <= 14 and every ideal
        from fences.rowmotion import (
            _ideal_complement_mask,
            _rho_hat_inv_mask,
            _rho_hat_mask,
        )

        for alpha in all_fence_compositions(14):
            F = build_fence(alpha)
            if F._self_duality_failure() is not None:
                continue
            for m in F.ideal_masks():
                lhs = _rho_hat_inv_mask(F, _ideal_complement_mask(F, m))
                rhs = _ideal_complement_mask(F, _rho_hat_mask(F, m))
                assert lhs == rhs, (alpha, m)


class TestSuperorbits:
    def test_2_7_cross_orbit_pair(self):
        # the canonical smallest ideal of the 13-element fence of (2^7)
        # whose complement lies in a different rowmotion orbit
        F = build_fence((2,) * 7)
        I = F.element_set([1, 3, 4], IDEAL)
        J = ideal_complement(F, I)
        assert set(J.elements) == {1, 2, 3, 4, 5, 6, 7, 8, 9, 12}
        assert orbit_of(F, I).representative != orbit_of(F, J).representative
        sup = superorbits(F)
        assert any(len(so.orbits) == 2 for so in sup)

    def test_superorbit_partition(self):
        for alpha in [(3, 3, 3), (2, 2, 2), (2, 1, 2, 1, 2), (2,) * 5]:
            F = build_fence(alpha)
            sup = superorbits(F)
            total = sum(so.size for so in sup)
            assert total == count_ideals(alpha)
            for so in sup:
                assert len(so.orbits) in (1, 2)
                if len(so.orbits) == 2:
                    assert so.orbits[0].size == so.orbits[1].size

    def test_closed_under_complement(self):
        F = build_fence((2, 1, 2, 1, 2))
        for so in superorbits(F):
            masks = {m for o in so.orbits for m in o.masks}
            for m in masks:
                J = ideal_complement(F, F.set_from_mask(m, IDEAL))
                assert J.mask in masks

    def test_unavailable_without_duality(self):
        with pytest.raises(FenceError):
            superorbits(build_fence((3, 2)))
