import json

import pytest

from invcompose.cli import run
from invcompose.schemafile import load_schema, parse_schema_text


def invoke(capsysbinary, *argv):
    code = run([str(a) for a in argv])
    out, err = capsysbinary.readouterr()
    return code, out.decode(), err.decode()


def test_equiv_composition_law(capsysbinary):
    code, out, _ = invoke(capsysbinary, "equiv", "(t & p1 -> r) & (t & p2 -> r)", "t & (p1 | p2) -> r")
    assert code == 0 and out.startswith("EQUIVALENT")


def test_equiv_fails(capsysbinary):
    code, out, _ = invoke(capsysbinary, "equiv", "p1 | p2", "p1 ^ p2")
    assert code == 1 and "NOT EQUIVALENT" in out and "p1=1 p2=1" in out


def test_equiv_json(capsysbinary):
    code, out, _ = invoke(capsysbinary, "equiv", "p1", "(p1 & !p2) | (p1 & p2)", "--format", "json")
    assert code == 0 and json.loads(out) == {"equivalent": True, "rows": 4, "witness": None}


def test_table(capsysbinary):
    code, out, _ = invoke(capsysbinary, "table", "p1 | p2")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "p1 p2 | p1 | p2"
    assert lines[-1] == "3/4 rows true"
    code, out, _ = invoke(capsysbinary, "table", "p1 | p2", "--format", "json")
    assert json.loads(out)["rows"] == [[[0, 0], 0], [[0, 1], 1], [[1, 0], 1], [[1, 1], 1]]


def test_table_atom_cap(capsysbinary):
    code, _, err = invoke(capsysbinary, "table", "a & b & c", "--atom-cap", "2")
    assert code == 2 and "cap" in err


@pytest.mark.parametrize("argv", [
    ["table", "t &"], ["bogus"], ["verify"], ["equiv", "a"], ["table", "a", "--samples", "0"],
])
def test_usage_errors(capsysbinary, argv):
    assert invoke(capsysbinary, *argv)[0] == 2


def test_compose_group2_xor(capsysbinary, data_dir, tmp_path):
    out_path = tmp_path / "composed.schema"
    code, _, _ = invoke(capsysbinary, "compose", "--xor", data_dir / "group2_trapezium.schema",
                        data_dir / "group2_parallelogram.schema", "--out", out_path)
    assert code == 0
    text = out_path.read_text()
    assert "exclusivity: propositional" in text
    assert "structure: t & ((p1 & !p2) ^ (p1 & p2)) -> r" in text
    assert load_schema(out_path).schema.kind.value == "composed-xor"


def test_compose_group1_empirical(capsysbinary, data_dir):
    code, out, _ = invoke(capsysbinary, "compose", "--xor", "--samples", "500", "--format", "json",
                          data_dir / "group1_median.schema", data_dir / "group1_parallel.schema")
    payload = json.loads(out)
    assert code == 0
    assert payload["evidence"]["status"] == "empirical" and payload["law_rows"] == 16
    assert payload["structure"] == "t & (p1 ^ p2) -> r"


def test_compose_plain(capsysbinary, data_dir):
    code, out, _ = invoke(capsysbinary, "compose", data_dir / "group1_median.schema",
                          data_dir / "group1_parallel.schema")
    assert code == 0
    assert "structure: t & (p1 | p2) -> r" in out
    assert parse_schema_text(out).schema.kind.value == "composed"


def test_compose_conclusion_mismatch(capsysbinary, data_dir, tmp_path):
    bad = tmp_path / "bad_set"
    bad.mkdir()
    (bad / "a.schema").write_text((data_dir / "group1_median.schema").read_text())
    (bad / "b.schema").write_text(
        (data_dir / "group1_parallel.schema").read_text().replace("conclusion = r", "conclusion = !r"))
    code, _, err = invoke(capsysbinary, "compose", bad)
    assert code == 2 and "conclusion mismatch" in err


def test_compose_xor_contradicted(capsysbinary, data_dir, tmp_path):
    # bind group II atoms as independent disjuncts: a parallelogram is a joint model
    for name, atom in (("a", "p1"), ("b", "p2")):
        (tmp_path / f"{name}.schema").write_text(
            f"[problem]\nname={name}\ncontext=t\ndisjunct={atom}\nconclusion=r\n"
            "[interpretation]\nt=group2.quadrilateral_diagonals\np1=group2.parallel_sides\n"
            "p2=group2.equal_sides\nr=group2.equal_ratios\n")
    code, out, _ = invoke(capsysbinary, "compose", "--xor", "--samples", "200", tmp_path)
    assert code == 1 and "contradicted" in out


def test_invert(capsysbinary, data_dir, tmp_path):
    composed = tmp_path / "c.schema"
    invoke(capsysbinary, "compose", "--xor", "--samples", "200", data_dir / "group1_median.schema",
           data_dir / "group1_parallel.schema", "--out", composed)
    code, out, _ = invoke(capsysbinary, "invert", composed)
    assert code == 0 and "# structure: t & r -> p1 ^ p2" in out
    assert parse_schema_text(out).schema.kind.value == "inverse"
    code, _, err = invoke(capsysbinary, "invert", data_dir / "group1_median.schema")
    assert code == 2


def test_verify_text(capsysbinary, data_dir):
    code, out, _ = invoke(capsysbinary, "verify", data_dir / "group1_inverse.schema",
                          "--sampler", "group1.inverse", "--samples", "1000", "--seed", "7")
    assert code == 0
    assert "passes: 1000/1000" in out
    median = int(out.split("branch median: ")[1].split()[0])
    parallel = int(out.split("branch parallel: ")[1].split()[0])
    assert median + parallel == 1000 and median > 0 and parallel > 0


def test_verify_json_keys(capsysbinary, data_dir):
    code, out, _ = invoke(capsysbinary, "verify", data_dir / "group2_inverse.schema",
                          "--sampler", "group2.inverse", "--samples", "300", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert {"schema", "samples", "passes", "failures", "branches", "counterexamples", "seed"} <= set(payload)
    assert payload["failures"] == 0 and payload["counterexamples"] == []
    assert sum(payload["branches"].values()) == 300


def test_verify_counterexample_strings(capsysbinary, data_dir):
    code, out, _ = invoke(capsysbinary, "verify", data_dir / "group2_inverse.schema", "--sampler",
                          "group2.control.perturbed", "--samples", "20", "--format", "json",
                          "--max-counterexamples", "3")
    payload = json.loads(out)
    assert code == 1 and len(payload["counterexamples"]) == 3
    for cx in payload["counterexamples"]:
        assert set(cx["config"]) == {"A", "B", "C", "D"}
        for xy in cx["config"].values():
            assert all(isinstance(v, str) and "/" in v for v in xy)


@pytest.mark.parametrize("name, sampler", [
    ("group1_median", "group1.forward.median"),
    ("group1_parallel", "group1.forward.parallel"),
    ("group2_trapezium", "group2.forward.trapezium"),
    ("group2_parallelogram", "group2.forward.parallelogram"),
    ("group1_inverse", "group1.inverse"),
    ("group2_inverse", "group2.inverse"),
])
def test_exit_codes_true_and_falsified(capsysbinary, data_dir, tmp_path, name, sampler):
    source = data_dir / f"{name}.schema"
    assert invoke(capsysbinary, "verify", source, "--sampler", sampler, "--samples", "100")[0] == 0
    falsified = tmp_path / "falsified.schema"
    falsified.write_text(source.read_text().replace("conclusion = r", "conclusion = !r"))
    assert invoke(capsysbinary, "verify", falsified, "--sampler", sampler, "--samples", "100")[0] == 1


def test_verify_missing_file(capsysbinary, tmp_path):
    code, _, err = invoke(capsysbinary, "verify", tmp_path / "nope.schema", "--sampler", "group1.inverse")
    assert code == 2


def test_verify_deterministic(capsysbinary, data_dir, tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"r{i}.json"
        invoke(capsysbinary, "verify", data_dir / "group1_inverse.schema", "--sampler",
               "group1.inverse", "--seed", "7", "--format", "json", "--out", path)
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
