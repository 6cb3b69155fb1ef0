from montdiv.bench import BenchRow, random_operands, run_bench, to_csv


def test_operands_are_reproducible():
    x1, q1 = random_operands(64, seed=3)
    x2, q2 = random_operands(64, seed=3)
    assert x1 == x2 and q1 == q2
    assert q1 & 1 and q1 >> 63


def test_row_math():
    row = BenchRow("rem", 2, 1000, 5, 2e-6)
    assert abs(row.ns_per_word - 2.0) < 1e-9
    assert abs(row.words_per_sec - 5e8) < 1
    assert to_csv(row).startswith("rem,2,1000,5,")


def test_small_run_rows():
    rows = run_bench(words=512, trials=1, seed=1, folds=(1, 4))
    assert [(r.op, r.fold) for r in rows] == [("rem", 1), ("divmod", 1), ("rem", 4), ("divmod", 4)]
    assert all(r.median_s > 0 for r in rows)
