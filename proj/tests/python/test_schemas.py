import json
import subprocess

import jsonschema
import pytest

import alphaspec as asp

GRAPHS = ["@", "A?", "A_", "Cs", "C]", "Dhc", "E{a?"]


def run(cli, *args):
    out = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
    return json.loads(out.stdout)


@pytest.mark.parametrize("g6", GRAPHS)
def test_cli_documents_validate(cli, schema, g6):
    jsonschema.validate(run(cli, "spectrum", "-g", g6, "--alpha", "0.3"), schema("spectral_summary"))
    jsonschema.validate(run(cli, "bounds", "-g", g6, "--alpha", "0.3"), schema("bound_evaluation"))
    jsonschema.validate(run(cli, "indices", "-g", g6), schema("bound_evaluation"))


def test_cli_report_validates(cli, schema, tmp_path):
    out = tmp_path / "all.json"
    subprocess.run([cli, "verify", "-t", "all", "--alphas", "0,0.9", "-q", "--json", str(out)], check=False)
    jsonschema.validate(json.loads(out.read_text()), schema("theorem_report"))


def test_module_matches_cli(cli):
    for g6 in GRAPHS:
        g = asp.Graph.from_graph6(g6)
        assert asp.spectrum(g, 0.3) == run(cli, "spectrum", "-g", g6, "--alpha", "0.3")
        assert asp.bounds(g, 0.3) == run(cli, "bounds", "-g", g6, "--alpha", "0.3")


def test_module_documents_validate(schema):
    g = asp.family("Tnd:9,4")
    jsonschema.validate(asp.spectrum(g, 0.5), schema("spectral_summary"))
    jsonschema.validate(asp.indices(g), schema("bound_evaluation"))
    jsonschema.validate(asp.verify("3.4", n="5..6", alphas=[0.2]), schema("theorem_report"))
