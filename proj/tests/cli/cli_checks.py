"""End-to-end checks of the conirep command-line tool.

Usage: cli_checks.py <conirep binary> <fixture dir> <schema file> <case>
"""

import json
import math
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, FIXTURES, SCHEMA, CASE = sys.argv[1:5]


def run(*args, env=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env)


def fixture(name):
    return os.path.join(FIXTURES, name)


def evaluate_json(name, *extra):
    proc = run("evaluate", "-i", fixture(name), *extra)
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout)


def parse_matrix(text):
    rows = [line for line in text.splitlines() if line.strip() and not line.startswith("#")]
    return [[float(x) for x in row.split(",")] for row in rows]


def case_evaluate_examples():
    zero = evaluate_json("zero3.csv")
    assert zero["ir"] == 1.0 and zero["irn"] == 1.0, zero
    wedge = evaluate_json("wedge2.csv")
    assert abs(wedge["ir"] - 1 / 24) < 1e-12, wedge
    assert wedge["extreme_ray_columns"] == [0, 2] and wedge["redundant_columns"] == [1, 3]
    ident = evaluate_json("identity3.csv")
    assert ident["ir"] == 0.0, ident


def case_schema():
    with open(SCHEMA) as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    for name in ("zero3.csv", "wedge2.csv", "simplicial3.csv", "identity3.csv", "plane3.csv"):
        validator.validate(evaluate_json(name))
    validator.validate(evaluate_json("plane3.csv", "--rank-deficient", "numeric", "--budget-samples", "5000"))


def case_deterministic():
    a = run("evaluate", "-i", fixture("simplicial3.csv"), "--deterministic")
    b = run("evaluate", "-i", fixture("simplicial3.csv"), "--deterministic")
    c = run("evaluate", "-i", fixture("simplicial3.csv"), "--threads", "3")
    assert a.returncode == 0 and a.stdout == b.stdout == c.stdout


def case_exit_codes():
    assert run("evaluate", "-i", fixture("bad.csv")).returncode == 1
    assert run("evaluate", "-i", fixture("ragged.csv")).returncode == 1
    assert run("evaluate", "-i", fixture("missing.csv")).returncode == 1
    assert run("evaluate", "-i", fixture("wedge2.csv"), "--no-such-flag").returncode == 1
    assert run("numeric", "-i", fixture("wedge2.csv"), "--n", "0").returncode == 1
    strict = run("evaluate", "-i", fixture("plane3.csv"), "--rank-deficient", "numeric",
                 "--budget-samples", "5000", "--strict")
    assert strict.returncode == 2, strict
    lenient = run("evaluate", "-i", fixture("plane3.csv"), "--rank-deficient", "numeric",
                  "--budget-samples", "5000")
    assert lenient.returncode == 0
    assert run("numeric", "-i", fixture("simplicial3.csv"), "--n", "1000").returncode == 3
    assert run("evaluate", "-i", fixture("simplicial3.csv"), "--max-states", "2").returncode == 3


def case_formats():
    csv = run("evaluate", "-i", fixture("wedge2.csv"), "--format", "csv")
    assert csv.returncode == 0 and "# ir=0.041666666666666664" in csv.stdout, csv.stdout
    text = run("evaluate", "-i", fixture("wedge2.csv"), "--format", "text")
    assert text.returncode == 0 and "0.041666666666666664" in text.stdout
    num = run("numeric", "-i", fixture("zero3.csv"), "--n", "4")
    assert num.returncode == 0
    # 3 * mean of squared midpoints of 4 cells = 3 * 21/64
    assert abs(json.loads(num.stdout)["ir_num"] - 63 / 64) < 1e-15


def case_compare():
    with tempfile.TemporaryDirectory() as tmp:
        plot = os.path.join(tmp, "plot.csv")
        proc = run("compare", "-i", fixture("simplicial3.csv"), "--ns", "8,16,32,64", "--plot-data", plot)
        assert proc.returncode == 0, proc.stderr
        lines = proc.stdout.splitlines()
        assert lines[0].startswith("# ir=") and lines[1] == "n,ir_num,abs_error"
        errors = [float(line.split(",")[2]) for line in lines[2:]]
        assert len(errors) == 4 and all(b <= a for a, b in zip(errors, errors[1:])), errors
        with open(plot) as fh:
            assert fh.read() == "\n".join(lines[1:]) + "\n"
    ident = run("compare", "-i", fixture("identity3.csv"), "--ns", "2,4")
    assert all(float(line.split(",")[2]) == 0 for line in ident.stdout.splitlines()[2:])


def case_encode():
    for spikes, expected, states in (("spikes.txt", "spikes_expected.csv", "2"),
                                     ("boundary_spikes.txt", "boundary_expected.csv", "2")):
        proc = run("encode", "-i", fixture(spikes), "--slot-length", "1", "--states", states)
        assert proc.returncode == 0, proc.stderr
        with open(fixture(expected)) as fh:
            assert proc.stdout == fh.read(), proc.stdout
    empty = run("encode", "-i", fixture("empty_spikes.txt"), "--slot-length", "1", "--states", "3")
    assert parse_matrix(empty.stdout) == [[0.0] * 3] * 3


def case_encode_evaluate_round_trip():
    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "c.csv")
        assert run("encode", "-i", fixture("spikes.txt"), "--slot-length", "1", "--states", "2",
                   "-o", out).returncode == 0
        with open(out) as fh:
            assert parse_matrix(fh.read()) == [[2.0, 1.0], [0.0, 1.0]]
        report = run("evaluate", "-i", out)
        assert report.returncode == 0
        result = json.loads(report.stdout)
        # columns (2,0) and (1,1): the cone misses the triangle above the diagonal
        assert abs(result["ir"] - 1 / 24) < 1e-12, result


def case_sweep():
    with tempfile.TemporaryDirectory() as tmp:
        for name in ("wedge2.csv", "identity3.csv"):
            with open(fixture(name)) as src, open(os.path.join(tmp, name), "w") as dst:
                dst.write(src.read())
        proc = run("sweep", "-i", tmp, "-i", fixture("zero3.csv"))
        assert proc.returncode == 0, proc.stderr
        lines = proc.stdout.splitlines()
        assert lines[0] == "file,states,neurons,ir,irn,output_volume,method"
        # directory entries come out sorted by name, before the explicit file
        names = [os.path.basename(line.split(",")[0]) for line in lines[1:]]
        assert names == ["identity3.csv", "wedge2.csv", "zero3.csv"], names
        irs = [float(line.split(",")[3]) for line in lines[1:]]
        assert irs[0] == 0 and math.isclose(irs[1], 1 / 24) and irs[2] == 1.0, lines


def case_threads_env():
    env = dict(os.environ, CONIREP_THREADS="2")
    a = run("numeric", "-i", fixture("simplicial3.csv"), "--n", "8", "--format", "csv", env=env)
    b = run("numeric", "-i", fixture("simplicial3.csv"), "--n", "8", "--format", "csv")
    assert a.returncode == 0 and a.stdout == b.stdout


globals()["case_" + CASE]()
print("ok", CASE)
