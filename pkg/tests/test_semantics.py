import pytest
from hypothesis import given, settings

from plogic import (
    Atom,
    Bin,
    Not,
    Operator,
    atoms_of,
    dual,
    evaluate,
    is_contradiction,
    is_parallel,
    is_perpendicular,
    is_tautology,
    op_value,
    parse,
    truth_table,
)
from plogic.errors import MissingAtom, TooManyAtoms
from plogic.semantics import TRUTH, assignments

from oracle import TABLES, oracle_eval, random_formula
from goldens import A_TEXTS, B_TEXTS, load_golden
from test_formula import formulas

P, Q = Atom("p"), Atom("q")


class TestOperatorTables:
    def test_all_nine_tables_against_independent_transcription(self):
        for op in Operator:
            for x, y in [(1, 1), (1, 0), (0, 1), (0, 0)]:
                assert op_value(op, x, y) == TABLES[op.value][(x, y)]

    def test_duality_at_table_level(self):
        for op in Operator:
            if op is Operator.UPDOWN:
                continue
            for x, y in [(1, 1), (1, 0), (0, 1), (0, 0)]:
                assert op_value(dual(op), x, y) == 1 - op_value(op, x, y)

    def test_replacement_operator_matches_iff(self):
        assert TRUTH[Operator.UPDOWN] == TRUTH[Operator.IFF]


class TestEvaluate:
    def test_spot_values(self):
        assert evaluate(parse("p nor q"), {"p": 0, "q": 0}) == 1
        assert evaluate(parse("p nand q"), {"p": 1, "q": 1}) == 0
        assert evaluate(Not(P), {"p": 1}) == 0

    def test_missing_atom(self):
        with pytest.raises(MissingAtom) as exc:
            evaluate(Bin(Operator.OR, P, Q), {"p": 1})
        assert exc.value.name == "q"

    def test_agrees_with_oracle_on_random_formulas(self, rng):
        names = ["p", "q", "r", "s"]
        for _ in range(500):
            f = random_formula(rng, names, 5)
            env = {n: rng.randint(0, 1) for n in names}
            assert evaluate(f, env) == oracle_eval(f, env)


class TestTruthTable:
    def test_single_atom_rows_descend(self):
        tt = truth_table(P)
        assert tt.rows == [{"p": 1}, {"p": 0}]
        assert tt.columns[tt.final_index].values == [1, 0]

    def test_row_order_invariant(self, rng):
        f = random_formula(rng, ["p", "q", "r"], 4)
        tt = truth_table(f)
        n = len(tt.atom_order)
        assert all(v == 1 for v in tt.rows[0].values())
        assert all(v == 0 for v in tt.rows[-1].values())
        assert len(tt.rows) == 2**n

    def test_final_column_is_root(self):
        tt = truth_table(parse(A_TEXTS[1]))
        assert tt.columns[tt.final_index].path == ()
        assert tt.columns[tt.final_index].values == [1] * 8

    def test_negated_family_final_column_all_zero(self):
        tt = truth_table(parse(B_TEXTS[1]))
        assert tt.columns[tt.final_index].values == [0] * 8

    def test_golden_layout_one_table(self):
        text, expected = load_golden("A1")
        tt = truth_table(parse(text))
        got = [[col.values[i] for col in tt.columns] for i in range(8)]
        assert got == expected

    def test_every_column_is_a_subformula_column(self, rng):
        from plogic import subformula_at

        f = random_formula(rng, ["p", "q"], 4)
        tt = truth_table(f)
        for i, row in enumerate(tt.rows):
            for col in tt.columns:
                assert col.values[i] == evaluate(subformula_at(f, col.path), row)

    def test_one_column_per_atom_and_connective_occurrence(self, rng):
        from plogic import table_labels
        from plogic.formula import Atom, Bin, Not

        def symbol_count(node):
            if isinstance(node, Atom):
                return 1
            if isinstance(node, Not):
                return symbol_count(node.child)
            return symbol_count(node.left) + 1 + symbol_count(node.right)

        for _ in range(100):
            f = random_formula(rng, ["p", "q", "r"], 4)
            tt = truth_table(f)
            assert len(tt.columns) == symbol_count(f)
            assert len(table_labels(f)) == len(tt.columns)

    def test_atom_guard(self):
        f = Atom("a0")
        for i in range(1, 25):
            f = Bin(Operator.OR, f, Atom(f"a{i}"))
        with pytest.raises(TooManyAtoms):
            truth_table(f)
        with pytest.raises(TooManyAtoms):
            is_tautology(f)

    def test_atom_guard_applies_to_the_union_in_relations(self):
        left = Atom("a0")
        for i in range(1, 13):
            left = Bin(Operator.OR, left, Atom(f"a{i}"))
        right = Atom("b0")
        for i in range(1, 13):
            right = Bin(Operator.OR, right, Atom(f"b{i}"))
        with pytest.raises(TooManyAtoms):
            is_parallel(left, right)


class TestClassification:
    def test_regrouping_tautologies(self):
        assert is_tautology(parse(A_TEXTS[3]))
        assert is_tautology(parse(A_TEXTS[4]))

    def test_negated_family_contradictions(self):
        assert is_contradiction(parse(B_TEXTS[4]))

    def test_xor_self(self):
        assert is_contradiction(parse("p xor p"))

    @given(formulas(max_depth=4))
    @settings(max_examples=150)
    def test_tautology_iff_negation_contradiction(self, f):
        assert is_tautology(f) == is_contradiction(Not(f))


class TestRelations:
    def test_parallel_with_negated_counterpart(self, regrouping_formulas):
        a, b = regrouping_formulas
        verdict = is_parallel(a[1], Not(b[1]))
        assert verdict.holds and verdict.witness is None

    def test_parallel_failure_witness_is_first_row(self):
        verdict = is_parallel(parse("p or q"), parse("p nor q"))
        assert not verdict.holds
        assert verdict.witness == {"p": 1, "q": 1}

    def test_parallel_reflexive(self):
        assert is_parallel(P, P).holds

    def test_perpendicular_fundamental_negated_pairs(self, regrouping_formulas):
        a, b = regrouping_formulas
        for i in range(1, 5):
            assert is_perpendicular(a[i], b[i]).holds

    def test_self_perpendicular_impossible(self):
        verdict = is_perpendicular(P, P)
        assert not verdict.holds
        assert verdict.witness == {"p": 1}

    def test_dual_operators_give_perpendicular_formulas(self):
        assert is_perpendicular(parse("p or q"), parse("p nor q")).holds

    def test_disjoint_atom_sets_use_the_union(self):
        verdict = is_parallel(P, Q)
        assert not verdict.holds
        assert verdict.witness == {"p": 1, "q": 0}

    def test_perpendicular_parallel_equivalences(self, rng):
        names = ["p", "q", "r", "s"]
        for _ in range(300):
            a = random_formula(rng, names, 4)
            b = random_formula(rng, names, 4)
            perp = is_perpendicular(a, b).holds
            assert perp == is_parallel(a, Not(b)).holds
            assert perp == is_parallel(Not(a), b).holds
