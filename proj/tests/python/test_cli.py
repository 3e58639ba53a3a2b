"""CLI surface tests: exit codes, byte determinism, schema validation."""

import json
import os
import pathlib
import subprocess

import pytest

jsonschema = pytest.importorskip("jsonschema")

CLI = os.environ.get("PARTALG_CLI")
SCHEMAS = pathlib.Path(os.environ.get("PARTALG_SCHEMAS", "schemas"))

pytestmark = pytest.mark.skipif(CLI is None, reason="PARTALG_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def make_validator(schema_name):
    with open(SCHEMAS / schema_name) as f:
        schema = json.load(f)
    with open(SCHEMAS / "defs.schema.json") as f:
        defs = json.load(f)
    resolver = jsonschema.RefResolver(
        base_uri="", referrer=schema, store={"defs.schema.json": defs}
    )
    return jsonschema.Draft7Validator(schema, resolver=resolver)


CASES = [
    (["enum", "3", "0", "--format", "json"], "enum.schema.json"),
    (["enum", "2", "2", "--tonal", "2", "--format", "json"], "enum.schema.json"),
    (["compose", "A1(2) ; A1(2)", "--format", "json"], "compose.schema.json"),
    (["gram", "--algebra", "P1", "--n", "3", "--format", "json"], "gram_matrix.schema.json"),
    (
        ["gram", "--algebra", "P2", "--n", "6", "--report", "--format", "json"],
        "gram_report.schema.json",
    ),
    (
        ["gram", "--algebra", "P1", "--n", "3", "--report", "--smith", "--format", "json"],
        "gram_report.schema.json",
    ),
    (
        ["potts", "--q", "2", "--image", "P[3,0]:(1 2)(3)", "--format", "json"],
        "potts_image.schema.json",
    ),
    (["potts", "--q", "3", "--n", "5", "--format", "json"], "potts_summary.schema.json"),
    (
        ["potts", "--q", "2", "--n", "3", "--rank", "--format", "json"],
        "potts_summary.schema.json",
    ),
    (
        ["bratelli", "--algebra", "P2", "--n-max", "4", "--format", "json"],
        "bratelli.schema.json",
    ),
    (["dims", "--what", "tcount", "--args", "3", "2", "--format", "json"], "dims.schema.json"),
    (
        ["semisimple", "--algebra", "P2", "--delta", "1/2", "--format", "json"],
        "semisimple.schema.json",
    ),
    (
        ["semisimple", "--algebra", "P2", "--delta", "0", "--n", "3", "--format", "json"],
        "semisimple.schema.json",
    ),
    (["oddeven", "--n", "3", "--format", "json"], "oddeven.schema.json"),
]


@pytest.mark.parametrize("args,schema", CASES, ids=lambda v: " ".join(v) if isinstance(v, list) else v)
def test_json_outputs_validate(args, schema):
    result = run(*args)
    assert result.returncode == 0, result.stdout + result.stderr
    payload = json.loads(result.stdout)
    make_validator(schema).validate(payload)


def test_byte_identical_across_runs():
    for args, _ in CASES:
        first = run(*args)
        second = run(*args)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode == 0


def test_golden_values():
    assert run("dims", "--what", "tcount", "--args", "3", "2").stdout.strip() == "15"
    report = json.loads(
        run("gram", "--algebra", "P2", "--n", "6", "--report", "--format", "json").stdout
    )
    assert report["degree"] == 76
    assert report["factors"] == [
        {"root": "0", "mult": 31},
        {"root": "1", "mult": 30},
        {"root": "2", "mult": 15},
    ]
    assert run("potts", "--q", "3", "--n", "5").stdout.strip() == "41"


def test_exit_codes():
    usage = run("gram", "--algebra", "P1")  # missing required --n
    assert usage.returncode == 1

    domain = run("gram", "--algebra", "P2", "--n", "3", "--smith", "--smith-limit", "2")
    assert domain.returncode == 2
    payload = json.loads(domain.stdout)
    make_validator("error.schema.json").validate(payload)
    assert payload["error"]["kind"] == "capacity"

    parity = run("oddeven", "--n", "2")
    assert parity.returncode == 2
    assert json.loads(parity.stdout)["error"]["kind"] == "parity"

    syntax = run("compose", "P[2,2]: (1 1)(2 2')")
    assert syntax.returncode == 2
    assert json.loads(syntax.stdout)["error"]["kind"] in ("syntax", "nodes")

    even_misuse = run("enum", "2", "2", "--even")
    assert even_misuse.returncode == 2

    capacity = run("enum", "9", "9", "--cap", "100")
    assert capacity.returncode == 2
    assert json.loads(capacity.stdout)["error"]["kind"] == "capacity"
