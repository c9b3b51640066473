import io
import json
from importlib import resources

import jsonschema
import pytest

from slowseq.cli import run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def validator():
    text = (
        resources.files("slowseq") / "schemas" / "cli_output.schema.json"
    ).read_text()
    return jsonschema.Draft202012Validator(json.loads(text))


def check_json(validator, stdout):
    doc = json.loads(stdout)
    validator.validate(doc)
    return doc


def test_slow_conolly_fixture():
    code, out, _ = invoke("slow", "--rec", "2", "--shift", "0", "--n-max", "16")
    assert code == 0
    assert out == "1 2 2 3 4 4 4 5 6 6 7 8 8 8 8 9\n"


def test_slow_bfile_format():
    code, out, _ = invoke(
        "slow", "--rec", "2", "--shift", "0", "--n-max", "3",
        "--format", "bfile",
    )
    assert code == 0
    assert out == "1 1\n2 2\n3 2\n"


def test_zeck_encode_fixture():
    code, out, _ = invoke("zeck", "encode", "--rec", "1,1", "5")
    assert code == 0
    assert out.strip() == "1000"


def test_zeck_roundtrip_via_cli():
    code, out, _ = invoke("zeck", "decode", "--rec", "1,1", "1000")
    assert code == 0
    assert out.strip() == "5"


def test_seq_fixture():
    code, out, _ = invoke("seq", "--rec", "1,2,0,3", "--n-max", "6")
    assert code == 0
    assert out.strip() == "1 6 11 26 51 121 256"


def test_recurrence_render():
    code, out, _ = invoke("recurrence", "print", "--rec", "2", "--shift", "1")
    assert code == 0
    assert out.strip() == "C(n) = C(n - 1 - C(n - 1)) + C(n - 2 - C(n - 2))"


def test_invalid_recurrence_exits_1():
    code, out, err = invoke("slow", "--rec", "0,1", "--n-max", "5")
    assert code == 1
    assert out == ""
    assert err.strip().count("\n") == 0  # one-line diagnostic


def test_unknown_flag_exits_1():
    code, _, err = invoke("slow", "--rec", "2", "--n-max", "5", "--bogus")
    assert code == 1
    assert err


def test_missing_rec_exits_1():
    code, _, _ = invoke("slow", "--n-max", "5")
    assert code == 1


def test_verify_ok():
    code, out, _ = invoke(
        "verify", "--rec", "2", "--rec", "1,1", "--shift", "0", "--n-max", "50"
    )
    assert code == 0
    assert "all routes agree" in out


def test_json_outputs_validate(validator):
    cases = [
        ("seq", "--rec", "2", "--n-max", "5", "--json"),
        ("slow", "--rec", "2", "--shift", "1", "--n-max", "10", "--json"),
        ("tree", "render", "--rec", "2", "--skeleton", "2", "--json"),
        ("tree", "render", "--rec", "2", "--skeleton", "2", "--shift", "1",
         "--labels", "5", "--json"),
        ("tree", "render", "--rec", "1,1", "--finite", "3", "--json"),
        ("recurrence", "print", "--rec", "1,2,0,3", "--json"),
        ("zeck", "encode", "--rec", "1,1", "17", "--json"),
        ("zeck", "decode", "--rec", "2", "110", "--json"),
        ("zeck", "enumerate", "--rec", "2,1", "--count", "9", "--json"),
        ("freq", "--rec", "2", "--shift", "1", "8", "--json"),
        ("asympt", "--rec", "1,1", "--json"),
        ("verify", "--rec", "2", "--shift", "0", "--n-max", "40", "--json"),
    ]
    for argv in cases:
        code, out, err = invoke(*argv)
        assert code == 0, (argv, err)
        check_json(validator, out)


def test_json_slow_values(validator):
    code, out, _ = invoke(
        "slow", "--rec", "2", "--shift", "0", "--n-max", "6", "--json"
    )
    assert code == 0
    doc = check_json(validator, out)
    assert doc["values"] == [1, 2, 2, 3, 4, 4]


def test_routes_flag():
    for route in ("recurrence", "oracle", "frequency"):
        code, out, _ = invoke(
            "slow", "--rec", "1,1", "--shift", "1", "--n-max", "12",
            "--route", route,
        )
        assert code == 0
    assert out.strip()


def test_asympt_text():
    code, out, _ = invoke("asympt", "--rec", "2")
    assert code == 0
    assert "kappa = 2.0000000000" in out
