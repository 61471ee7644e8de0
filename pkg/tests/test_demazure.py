"""Demazure subsets, the operator on formal sums, and the structural checks."""

import pytest

from demazure_crystals import (
    FormalSum,
    algebraic_demazure,
    b_inf,
    b_lambda,
    binf_consistency_check,
    braid_order,
    braid_witness_search,
    cartan_matrix,
    char_map,
    demazure_binf,
    demazure_blambda,
    demazure_chain,
    demazure_operator,
    demazure_sum,
    enumerate_weyl,
    refined_formula_check,
    string_property_check,
    structural_check,
    word_independence_check,
)


def test_non_reduced_word_rejected():
    crystal = b_lambda("A2", (1, 0))
    with pytest.raises(ValueError):
        demazure_blambda(crystal, (1, 1))
    with pytest.raises(ValueError):
        demazure_binf(b_inf("A2"), (2, 2), 4)


def test_empty_word_is_the_highest_element():
    crystal = b_lambda("A2", (1, 0))
    assert demazure_blambda(crystal, ()).members == {crystal.highest}
    assert demazure_binf(b_inf("A2"), (), 5).members == {b_inf("A2").highest}


def test_frozen_sizes():
    assert len(demazure_blambda(b_lambda("A2", (1, 0)), (1,))) == 2
    assert len(demazure_blambda(b_lambda("A2", (1, 1)), (1, 2))) == 5
    assert len(demazure_blambda(b_lambda("A2", (1, 1)), (1, 2, 1))) == 8


def test_longest_word_recovers_the_whole_crystal():
    crystal = b_lambda("B2", (1, 1))
    group = enumerate_weyl(crystal.cartan)
    word = next(iter(group.reduced_words(group.longest)))
    assert demazure_blambda(crystal, word).members == crystal.generate()


def test_demazure_binf_single_string():
    real = b_inf("A2")
    members = demazure_binf(real, (1,), 3).members
    assert members == {real.replay((1,) * k) for k in range(4)}


def test_demazure_binf_two_letters_depth_two():
    # brute-force recursion: u, f1, f1^2, f2, f2^2, f2 f1 -- six elements;
    # one depth-2 element of the full crystal (f1 f2 u) lies outside
    real = b_inf("A2")
    members = demazure_binf(real, (1, 2), 2).members
    assert len(members) == 6
    assert real.f(1, real.f(2, real.highest)) not in members
    assert len(real.generate(2)) == 7


def test_demazure_binf_restriction_stability():
    real = b_inf("B2")
    wide = demazure_binf(real, (1, 2, 1), 5).members
    narrow = demazure_binf(real, (1, 2, 1), 4).members
    assert narrow == {b for b in wide if b.depth <= 4}


def test_monotonicity_in_the_word():
    crystal = b_lambda("A2", (2, 1))
    for word in [(1,), (1, 2), (1, 2, 1)]:
        prev = demazure_blambda(crystal, word[:-1]).members
        assert prev <= demazure_blambda(crystal, word).members


def test_raising_closure_on_demazure_sets():
    crystal = b_lambda("B2", (1, 1))
    group = enumerate_weyl(crystal.cartan)
    for w in group:
        for word in group.reduced_words(w):
            members = demazure_blambda(crystal, word).members
            for x in members:
                for i in crystal.cartan.colors:
                    up = crystal.e(i, x)
                    assert up is None or up in members


def test_demazure_operator_frozen_examples():
    # zero pairing: single k = 0 term
    crystal = b_lambda("A2", (1, 0))
    u = crystal.highest
    assert demazure_operator(crystal, 2, FormalSum.basis(u)) == FormalSum.basis(u)
    # the full string for A1 at weight 2
    a1 = b_lambda("A1", (2,))
    chain = demazure_operator(a1, 1, FormalSum.basis(a1.highest))
    assert chain == FormalSum.from_elements(a1.generate())
    # pairing -1: the empty sum
    x = a1.f(1, a1.highest)  # weight 0
    y = a1.f(1, x)  # weight -2: operator gives -e(x)
    mid = demazure_operator(a1, 1, FormalSum.basis(x))
    assert mid == FormalSum.basis(x)  # pairing 0: single term
    low = demazure_operator(a1, 1, FormalSum.basis(y))
    assert low == -FormalSum.basis(x)
    # pairing exactly -1 appears in A2 at weight (-1, 1)
    a2 = b_lambda("A2", (1, 0))
    f1u = a2.f(1, a2.highest)
    assert a2.wt(f1u) == (-1, 1)
    assert demazure_operator(a2, 1, FormalSum.basis(f1u)) == FormalSum.zero()


@pytest.mark.parametrize("type_label,lam", [("A2", (1, 1)), ("B2", (1, 1))])
def test_demazure_operator_idempotent_on_basis_elements(type_label, lam):
    crystal = b_lambda(type_label, lam)
    for x in crystal.generate():
        for i in crystal.cartan.colors:
            once = demazure_operator(crystal, i, FormalSum.basis(x))
            assert demazure_operator(crystal, i, once) == once


def test_demazure_operator_fixes_string_sums():
    crystal = b_lambda("A2", (2, 1))
    for i in crystal.cartan.colors:
        for s in crystal.strings(i):
            total = FormalSum.from_elements(s.members)
            assert demazure_operator(crystal, i, total) == total


def test_refined_formula_small_grid():
    for type_label, lam in [("A1", (3,)), ("A2", (1, 1)), ("B2", (1, 1))]:
        crystal = b_lambda(type_label, lam)
        group = enumerate_weyl(crystal.cartan)
        for w in group:
            for word in group.reduced_words(w):
                assert refined_formula_check(crystal, word).passed


def test_refined_formula_both_longest_words_agree():
    crystal = b_lambda("A2", (1, 1))
    lhs = demazure_chain(crystal, (1, 2, 1))
    rhs = demazure_chain(crystal, (2, 1, 2))
    assert lhs == rhs == FormalSum.from_elements(crystal.generate())


def test_string_property_small_grid():
    crystal = b_lambda("A2", (1, 1))
    group = enumerate_weyl(crystal.cartan)
    for w in group:
        for word in group.reduced_words(w):
            assert string_property_check(crystal, word).passed
    assert string_property_check(crystal, ()).passed


def test_word_independence():
    crystal = b_lambda("A2", (1, 1))
    group = enumerate_weyl(crystal.cartan)
    w0 = group.longest
    report = word_independence_check(crystal, w0)
    assert report.passed and report.details["size"] == 8
    b2 = b_lambda("B2", (1, 1))
    for w in enumerate_weyl(b2.cartan):
        assert word_independence_check(b2, w).passed


@pytest.mark.parametrize("statement", ["THM32", "COR33", "THM35", "THM35R", "P3"])
def test_structural_word_statements(statement):
    real = b_inf("A2")
    group = enumerate_weyl(real.cartan)
    for w in group:
        report = structural_check(statement, real, depth=5, word=w.canonical_word)
        assert report.passed, report.witness


def test_structural_psi():
    for type_label in ("A2", "B2"):
        report = structural_check("PSI", b_inf(type_label), depth=5)
        assert report.passed, report.witness


def test_structural_base_statements():
    for statement in ("LEM31", "LEM34"):
        report = structural_check(statement, b_inf("A2"), depth=5)
        assert report.passed, report.witness


def test_structural_single_base_example():
    real = b_inf("A2")
    base = real.f(2, real.highest)
    report = structural_check("LEM34", real, depth=6, bases=[base], colors=[(1, 1)])
    assert report.passed


def test_structural_check_rejects_unknown_statement():
    with pytest.raises(ValueError):
        structural_check("NOSUCH", b_inf("A2"), depth=4)
    with pytest.raises(ValueError):
        structural_check("THM32", b_inf("A2"), depth=4)  # word is required
    with pytest.raises(ValueError):
        structural_check("PSI", b_inf("A2"), depth=0)
    with pytest.raises(ValueError):
        demazure_binf(b_inf("A2"), (1,), -1)
    with pytest.raises(ValueError):
        braid_witness_search(b_lambda("A2", (1, 0)), 1, 1)


def test_infinity_side_consistency():
    for type_label, lam in [("A2", (1, 1)), ("B2", (1, 0))]:
        crystal = b_lambda(type_label, lam)
        group = enumerate_weyl(crystal.cartan)
        for w in group:
            report = binf_consistency_check(crystal, w.canonical_word, 6)
            assert report.passed, report.witness


def test_string_trichotomy_on_the_infinity_side():
    """On a truncated string {head, f head, ...} the intersection with a
    Demazure subset is empty, the head alone, or the whole truncated string."""
    depth = 5
    real = b_inf("A2")
    group = enumerate_weyl(real.cartan)
    heads = {
        (i, b)
        for b in real.generate(depth)
        for i in real.cartan.colors
        if real.eps(i, b) == 0
    }
    for w in group:
        members = demazure_binf(real, w.canonical_word, depth).members
        for i, head in heads:
            string = [head]
            cur = head
            while cur.depth < depth:
                cur = real.f(i, cur)
                string.append(cur)
            inter = members & set(string)
            assert inter in (set(), {head}, set(string))


def test_blambda_strings_are_prefixes_of_infinity_strings():
    """Each highest-weight string is the membership-bounded prefix of the
    ambient infinity-crystal string with the same head."""
    for type_label, lam in [("A2", (2, 1)), ("B2", (1, 1))]:
        crystal = b_lambda(type_label, lam)
        real = crystal.realization
        for i in crystal.cartan.colors:
            for s in crystal.strings(i):
                cur = s.head.base
                assert real.eps(i, cur) == 0
                for member in s.members[1:]:
                    cur = real.f(i, cur)
                    assert member.base == cur
                # the next ambient step, which always exists, falls outside
                assert not crystal.contains_base(real.f(i, cur))


def test_key_mass_cross_oracle():
    """|B_w(lambda)| equals the coefficient mass of the group-ring chain
    applied to e^lambda, tying the recursion to the algebraic operator."""
    from demazure_crystals import WeightPolynomial, apply_demazure_word

    for type_label, lam in [("A2", (2, 1)), ("B2", (1, 1)), ("G2", (1, 0))]:
        crystal = b_lambda(type_label, lam)
        data = crystal.cartan
        group = enumerate_weyl(data)
        for w in group:
            for word in group.reduced_words(w):
                poly = apply_demazure_word(data, word, WeightPolynomial.monomial(lam))
                assert poly.total() == len(demazure_blambda(crystal, word))


def test_braid_orders():
    assert braid_order(cartan_matrix("A1xA1"), 1, 2) == 2
    assert braid_order(cartan_matrix("A2"), 1, 2) == 3
    assert braid_order(cartan_matrix("B2"), 1, 2) == 4
    assert braid_order(cartan_matrix("G2"), 1, 2) == 6


def test_braid_search_commuting_colors_has_no_witness():
    for lam in [(0, 0), (1, 2), (2, 2)]:
        report = braid_witness_search(b_lambda("A1xA1", lam), 1, 2)
        assert report.passed
        assert report.details["witness_count"] == 0


def test_braid_search_a2_report():
    report = braid_witness_search(b_lambda("A2", (1, 1)), 1, 2)
    assert report.passed  # the Demazure-sum instances agree
    assert report.details["sum_instances"] >= 1
    report0 = braid_witness_search(b_lambda("A2", (0, 0)), 1, 2)
    assert report0.details["witness_count"] == 0


def test_intertwining_with_the_group_ring():
    for type_label, lam in [("A2", (1, 1)), ("B2", (1, 1))]:
        crystal = b_lambda(type_label, lam)
        data = crystal.cartan
        for x in crystal.generate():
            for i in data.colors:
                crystal_side = char_map(crystal, demazure_operator(crystal, i, FormalSum.basis(x)))
                ring_side = algebraic_demazure(data, i, char_map(crystal, x))
                assert crystal_side == ring_side


def test_check_report_repr_on_failure_paths():
    # forcing a failure report through a wrong expectation exercises the witness plumbing
    crystal = b_lambda("A2", (1, 0))
    report = refined_formula_check(crystal, (1,))
    assert report.passed and report.witness is None
    assert len(demazure_sum(demazure_blambda(crystal, (1,)))) == 2
