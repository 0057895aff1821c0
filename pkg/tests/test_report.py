import json

import jsonschema
import pytest

from cliquelab.report import SCHEMA_VERSION, Report, emit_report, load_schema


def sample(**kw):
    base = dict(command="sweep", source="family:k=4..4", n=0, m=0, seed=0)
    base.update(kw)
    return Report(**base)


def test_schema_accepts_minimal_report():
    doc = json.loads(emit_report(sample(), "json"))
    jsonschema.validate(doc, load_schema())
    assert doc["schema_version"] == SCHEMA_VERSION == 1
    assert "timings" not in doc


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update(schema_version=2),
        lambda d: d.update(extra=1),
        lambda d: d.pop("seed"),
        lambda d: d["input"].update(n=-1),
        lambda d: d["outcomes"].append({"algorithm": "other", "mode": "adversarial", "answer": 1,
                                        "oracle": 1, "agreement": True, "found": True}),
    ],
)
def test_schema_rejects(mutate):
    doc = json.loads(emit_report(sample(), "json"))
    mutate(doc)
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, load_schema())


def test_json_is_sorted_and_newline_terminated():
    text = emit_report(sample(rows=[{"b": 1, "a": True}]), "json")
    assert text.endswith("}\n")
    assert text.index('"a"') < text.index('"b"')


def test_text_table_cells():
    text = emit_report(sample(rows=[{"k": 4, "agreement": False, "set": [1, 2], "x": None}],
                              timings={"sweep": 0.5}), "text")
    header, rule, row = [l for l in text.splitlines() if l.startswith(("k ", "-", "4 "))][:3]
    assert header.split() == ["k", "agreement", "set", "x"]
    assert row.split() == ["4", "no", "{1,2}", "-"]
    assert "sweep=0.5000s" in text
