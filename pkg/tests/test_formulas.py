import pytest

from bnfullerene import (
    CountLedger,
    FormulaInput,
    legacy_pattern_formula,
    matching6_formula,
    matching_formula,
    pattern_formula,
    recurrence_residuals,
)
from bnfullerene.census import collect_counts
from bnfullerene.formulas import (
    MissingClassInput,
    MissingCount,
    NoClosedForm,
    RECURRENCE_LABELS,
    matching6_formula_from_q,
    pattern_formula_from_q,
)

H_SWEEP = [0] + list(range(2, 31))


def test_matching_formula_examples():
    assert matching_formula(1, 3) == 21
    assert matching_formula(2, 3) == 168
    assert matching_formula(4, 0) == 9
    assert matching_formula(5, 0) == 0


def test_matching6_examples():
    assert matching6_formula("cube", 0) == 0
    assert matching6_formula("tubular", 3) == 367
    assert matching6_formula("hexagonal-prism", 2, 6) == 20


def test_matching6_domain():
    with pytest.raises(ValueError):
        matching6_formula("cube", 2)
    with pytest.raises(ValueError):
        matching6_formula("tubular", 4)
    with pytest.raises(MissingClassInput):
        matching6_formula("lantern", 4)
    with pytest.raises(MissingClassInput):
        matching6_formula(object(), 4, 4)


def test_pattern_formula_examples():
    assert pattern_formula("P", FormulaInput(0)) == 120
    assert pattern_formula("Q", FormulaInput(0, "cube")) == 96
    assert pattern_formula("Q", FormulaInput(3, "tubular")) == 2298
    assert pattern_formula("H", FormulaInput(9)) == 6
    assert pattern_formula("C", FormulaInput(3)) == 4 * 21
    assert pattern_formula("K", FormulaInput(3)) == 4176


def test_pattern_formula_errors():
    with pytest.raises(NoClosedForm):
        pattern_formula("W", FormulaInput(3, "tubular"))
    with pytest.raises(MissingClassInput):
        pattern_formula("Q", FormulaInput(4))
    with pytest.raises(MissingClassInput):
        pattern_formula("U", FormulaInput(4, "lantern"))  # y missing
    with pytest.raises(ValueError):
        pattern_formula("Z", FormulaInput(4))


def test_formula_input_domain():
    with pytest.raises(ValueError):
        FormulaInput(1)
    with pytest.raises(ValueError):
        FormulaInput(-2)
    with pytest.raises(ValueError):
        FormulaInput(3, "cube")
    with pytest.raises(ValueError):
        FormulaInput(4, "tubular")
    with pytest.raises(ValueError):
        FormulaInput(4, "hexagonal-prism")
    assert FormulaInput(4).m == 24


def test_integrality_sweep():
    for h in H_SWEEP:
        for k in range(1, 6):
            assert matching_formula(k, h) >= 0
        for name in "CDEHIJKLOPTV":
            assert pattern_formula(name, FormulaInput(h)) >= 0
        if h >= 2:
            for y in range(7):
                assert matching6_formula("dispersive", h, y) >= 0
                for name in "QUSR":
                    assert pattern_formula(name, FormulaInput(h, "dispersive", y)) >= 0
        if h >= 3 and h % 3 == 0:
            assert matching6_formula("tubular", h) >= 0
            for name in "QUSR":
                assert pattern_formula(name, FormulaInput(h, "tubular")) >= 0


def test_q_symbolic_forms_match_class_resolved():
    # eliminating Q must give the same U, S, R and M6 as the class branches
    for h in range(3, 31, 3):
        inp = FormulaInput(h, "tubular")
        q = pattern_formula("Q", inp)
        for name in "USR":
            assert pattern_formula_from_q(name, h, q) == pattern_formula(name, inp)
        assert matching6_formula_from_q(h, q) == matching6_formula("tubular", h)
    for h in range(2, 31):
        for y in range(7):
            inp = FormulaInput(h, "dispersive", y)
            q = pattern_formula("Q", inp)
            for name in "USR":
                assert pattern_formula_from_q(name, h, q) == pattern_formula(name, inp)
            assert matching6_formula_from_q(h, q) == matching6_formula("dispersive", h, y)
    # cube: Q = 96 forces U = S = R = 0 and M6 = 0
    assert pattern_formula_from_q("U", 0, 96) == 0
    assert pattern_formula_from_q("S", 0, 96) == 0
    assert pattern_formula_from_q("R", 0, 96) == 0
    assert matching6_formula_from_q(0, 96) == 0


def test_recurrence_residuals_zero_on_cube(cube):
    ledger = collect_counts(cube, "cube")
    residuals = recurrence_residuals(ledger, 12)
    assert tuple(residuals) == RECURRENCE_LABELS
    assert all(v == 0 for v in residuals.values())


def test_recurrence_residuals_zero_on_tube1(tube1):
    ledger = collect_counts(tube1, "tube:1")
    assert all(v == 0 for v in recurrence_residuals(ledger, 21).values())


def test_residuals_detect_perturbation(cube):
    ledger = collect_counts(cube, "cube")
    patterns = dict(ledger.patterns)
    patterns["Q"] += 1
    poked = CountLedger("cube", None, dict(ledger.matchings), patterns)
    residuals = recurrence_residuals(poked, 12)
    assert residuals["1c"] == -1
    assert residuals["1d"] == -2
    assert all(v == 0 for lbl, v in residuals.items() if lbl not in ("1c", "1d"))


def test_residuals_missing_count(cube):
    ledger = collect_counts(cube, "cube", names=("Q", "R", "S", "T", "U", "K"))
    with pytest.raises(MissingCount):
        recurrence_residuals(ledger, 12)


def test_legacy_path5_formula():
    for h in H_SWEEP:
        inp = FormulaInput(h)
        legacy = legacy_pattern_formula("P", inp)
        assert legacy == 16 * (3 * h + 12) - 48
        assert legacy != pattern_formula("P", inp)
    with pytest.raises(NoClosedForm):
        legacy_pattern_formula("Q", FormulaInput(0))


def test_log_concavity_of_formula_values():
    for h in H_SWEEP:
        values = [matching_formula(k, h) for k in range(1, 6)]
        for k in range(1, 4):
            assert values[k] ** 2 >= values[k - 1] * values[k + 1]
