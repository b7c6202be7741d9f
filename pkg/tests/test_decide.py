import pytest

from splicekit import (
    Alphabet,
    CandidateLimitExceededError,
    ClassicRule,
    PixtonRule,
    SplicingSystem,
    canonical_system,
    closure_language,
    custom_bounds,
    decide_splicing,
    determinize,
    enumerate_words,
    equivalent,
    minimize,
    parse_regex,
    theorem_bounds,
)
from splicekit.decide import candidate_count, canonical_axioms

A = Alphabet.from_string("a")
AB = Alphabet.from_string("ab")


def lang(regex, alphabet=AB):
    return minimize(determinize(parse_regex(regex, alphabet)))


def test_theorem_bounds_arithmetic():
    b = theorem_bounds(2, "classic")
    assert b.axiom_len_lt == 16
    assert b.component_lts == (24, 4, 4, 24)
    assert b.source == "theorem"
    p = theorem_bounds(2, "pixton")
    assert p.axiom_len_lt == 16
    assert p.component_lts == (4, 4, 24)
    one = theorem_bounds(1, "classic")
    assert one.axiom_len_lt == 7
    assert one.component_lts == (11, 2, 2, 11)


def test_bounds_validation():
    with pytest.raises(ValueError):
        theorem_bounds(0, "classic")
    with pytest.raises(ValueError):
        custom_bounds("classic", 0, 1, 1)
    with pytest.raises(ValueError):
        theorem_bounds(2, "sticky")


def test_candidate_count_formula():
    # over a unary alphabet, |Sigma^{<b}| = b
    assert candidate_count(A, theorem_bounds(2, "classic")) == 24 * 4 * 4 * 24
    assert candidate_count(A, theorem_bounds(2, "pixton")) == 4 * 4 * 24


def test_canonical_axioms_stay_symbolic():
    axioms = canonical_axioms(lang("(aa)*", A), theorem_bounds(2, "classic"))
    got = enumerate_words(axioms, 20)
    assert got == ["a" * n for n in range(0, 16, 2)]


def test_canonical_system_for_even_words_has_no_rules():
    system = canonical_system(lang("(aa)*", A), "classic", theorem_bounds(2, "classic"))
    assert system.rules == ()
    assert system.symbolic_axioms


def test_canonical_system_for_sigma_star_includes_trivial_rule():
    system = canonical_system(lang("a*", A), "pixton", theorem_bounds(1, "pixton"))
    assert PixtonRule("", "", "") in system.rules
    assert enumerate_words(canonical_axioms(lang("a*", A), theorem_bounds(1, "pixton")), 10) == [
        "a" * n for n in range(7)
    ]


def test_decide_even_words_is_no_with_long_witness():
    decision = decide_splicing(lang("(aa)*", A), "classic", theorem_bounds(2, "classic"))
    assert decision.verdict == "no"
    assert decision.witness == "a" * 16
    assert decision.stats["monoid_size"] == 2
    assert decision.exit_code == 1


def test_decide_even_words_pixton_is_no():
    decision = decide_splicing(lang("(aa)*", A), "pixton", theorem_bounds(2, "pixton"))
    assert decision.verdict == "no"
    assert decision.witness == "a" * 16


def test_decide_sigma_star_pixton_is_yes():
    decision = decide_splicing(lang("a*", A), "pixton", theorem_bounds(1, "pixton"))
    assert decision.verdict == "yes"
    assert decision.exit_code == 0
    assert equivalent(closure_language(decision.system), lang("a*", A))[0]


def test_decide_custom_bounds_yes_for_running_example():
    apbp = lang("a+b+")
    decision = decide_splicing(apbp, "classic", custom_bounds("classic", 3, 3, 3))
    assert decision.verdict == "yes"
    assert ClassicRule("a", "b", "", "ab") in decision.system.rules
    assert ClassicRule("ab", "", "a", "b") in decision.system.rules
    assert equivalent(closure_language(decision.system), apbp)[0]


def test_decide_custom_bounds_never_says_no():
    decision = decide_splicing(
        lang("(aa)*", A), "classic", custom_bounds("classic", 3, 2, 2)
    )
    assert decision.verdict == "inconclusive"
    assert decision.reason == "bounds below theorem guarantee"
    assert decision.witness is None
    assert decision.exit_code == 2


def test_growing_custom_bounds_keep_yes():
    astar = lang("a*", A)
    for outer in (2, 3, 4):
        decision = decide_splicing(
            astar, "pixton", custom_bounds("pixton", 2, 2, outer)
        )
        assert decision.verdict == "yes"


def test_prune_keeps_generated_language():
    apbp = lang("a+b+")
    bounds = custom_bounds("classic", 3, 2, 2)
    plain = canonical_system(apbp, "classic", bounds, prune=False)
    pruned = canonical_system(apbp, "classic", bounds, prune=True)
    assert len(pruned.rules) <= len(plain.rules)
    assert set(pruned.rules) <= set(plain.rules)
    assert equivalent(closure_language(plain), closure_language(pruned))[0]


def test_classic_certificate_embeds_to_equivalent_pixton_system():
    apbp = lang("a+b+")
    decision = decide_splicing(apbp, "classic", custom_bounds("classic", 3, 2, 2))
    assert decision.verdict == "yes"
    embedded = SplicingSystem(
        "pixton",
        AB,
        decision.system.axioms,
        tuple(r.pixton_equivalent() for r in decision.system.rules),
    )
    assert equivalent(closure_language(embedded), closure_language(decision.system))[0]


def test_candidate_guard_trips_cleanly():
    apbp = lang("a+b+")
    with pytest.raises(CandidateLimitExceededError) as err:
        decide_splicing(apbp, "classic", theorem_bounds(5, "classic"))
    assert err.value.limit == 10_000_000
    assert err.value.candidates > 10_000_000
    assert str(err.value.candidates) in str(err.value)


def test_candidate_limit_env_override(monkeypatch):
    monkeypatch.setenv("SPLICEKIT_CANDIDATE_LIMIT", "10")
    with pytest.raises(CandidateLimitExceededError) as err:
        decide_splicing(lang("a*", A), "pixton", theorem_bounds(1, "pixton"))
    assert err.value.limit == 10


def test_threaded_filtering_matches_serial():
    apbp = lang("a+b+")
    bounds = custom_bounds("classic", 3, 2, 2)
    serial = canonical_system(apbp, "classic", bounds, threads=1)
    threaded = canonical_system(apbp, "classic", bounds, threads=4)
    assert serial.rules == threaded.rules


def test_decision_stats_shape():
    decision = decide_splicing(lang("a*", A), "pixton", theorem_bounds(1, "pixton"))
    stats = decision.stats
    assert stats["candidate_rules"] == 2 * 2 * 11
    assert stats["respecting_rules"] == stats["rules_emitted"] == 44
    assert stats["closure_rounds"] >= 1
    assert stats["closure_states"] > 0
    assert stats["wall_time_s"] >= 0
