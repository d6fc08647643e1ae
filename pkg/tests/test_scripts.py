import importlib.util
import json
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def load(name):
    spec = importlib.util.spec_from_file_location(name, SCRIPTS / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def test_transform_graph(tmp_path):
    mod = load("transform_graph")
    result = mod.run(mod.Config(out_dir=str(tmp_path)))
    assert result["upper"] == "10/3"
    saved = json.loads((tmp_path / "branches.json").read_text())
    assert len(saved["maps"]["greedy"]["branches"]) == 4


def test_unique_survey(tmp_path):
    mod = load("unique_survey")
    rows = mod.run(mod.Config(tuples=["2"], grid=4, out=str(tmp_path / "s.json")))
    # 0 and 1 are unique; 1/4, 1/2, 3/4 are dyadic
    assert rows[0]["counts"] == {"unique": 2, "not-unique": 3}
