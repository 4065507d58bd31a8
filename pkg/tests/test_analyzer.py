import json
import math
import pathlib
import random

from trimsum.analyzer import CSV_HEADER, compare, cost_profile
from trimsum.digits import parse
from trimsum.families import TestRule
from trimsum.oracle import random_digit_string

A = parse("32184")
GOLDEN = pathlib.Path(__file__).parent / "data" / "compare_golden.csv"


def test_weight_magnitudes():
    assert cost_profile(A, TestRule.sum(39)).weight_magnitude == 4
    assert cost_profile(A, TestRule.binomial(39)).weight_magnitude == 29
    assert cost_profile(A, TestRule.trim(181)).weight_magnitude == 18
    assert cost_profile(A, TestRule.binomial(181)).weight_magnitude == 171


def test_single_digit_needs_no_iterations():
    report = cost_profile(parse("7"), TestRule.trim(7))
    assert report.iterations == 0 and report.digit_ops == 0
    assert report.max_intermediate_digits == 1


def test_trim_costs_one_op_per_step():
    rng = random.Random(88)
    for _ in range(50):
        a = random_digit_string(rng, max_digits=25, signed=False)
        q = rng.choice([7, 13, 17, 181, 2077])
        report = cost_profile(a, TestRule.trim(q))
        assert report.digit_ops == report.iterations


def test_summing_cost_floor():
    rng = random.Random(89)
    for _ in range(50):
        a = random_digit_string(rng, max_digits=25, signed=False)
        for rule in (TestRule.sum(17), TestRule.binomial(17)):
            report = cost_profile(a, rule)
            if report.iterations:
                assert report.digit_ops >= len(a) - 1


def test_weight_ordering_between_families():
    # summing weights scale q down; binomial weights are the gap to 10
    for q in range(16, 1000):
        if q % 2 == 0 or q % 5 == 0:
            continue
        omega = TestRule.trim(q).omega
        assert abs(omega) <= math.ceil(3 * q / 10) < abs(10 - q)


def test_compare_row_count_and_weights():
    table = compare([7, 9, 11, 17, 39], [A])
    assert len(table.rows) == 15
    sums = {r.q: r.weight_magnitude for r in table.rows if r.family == "sum"}
    assert sums == {7: 2, 9: 1, 11: 1, 17: 5, 39: 4}


def test_compare_empty_inputs_give_empty_table():
    table = compare([7, 9], [])
    assert table.rows == ()
    assert table.to_csv() == CSV_HEADER + "\n"


def test_compare_matches_golden_file():
    table = compare([7, 9, 11, 17, 39, 181], [A])
    assert table.to_csv() == GOLDEN.read_text()


def test_compare_output_is_byte_deterministic():
    first = compare([17, 7], [A, parse("999")])
    second = compare([7, 17], [parse("999"), A])
    assert first.to_csv() == second.to_csv()
    assert json.dumps(first.as_json()) == json.dumps(second.as_json())


def test_json_mirrors_csv():
    table = compare([7], [A])
    doc = table.as_json()
    assert [list(row) for row in doc] == [CSV_HEADER.split(",")] * 3
    assert doc[0]["family"] == "binomial" and doc[2]["family"] == "trim"
    csv_line = table.to_csv().splitlines()[1]
    assert csv_line == ",".join(str(v) for v in doc[0].values())
