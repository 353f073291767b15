import json

import jsonschema
import pytest

from neutralizer.engine import RecordOptions, run_to_fixpoint
from neutralizer.families import gen_gn
from neutralizer.report import (
    CSV_HEADER,
    ExperimentRow,
    load_trace,
    rows_to_csv,
    save_rows_json,
    save_trace,
    trace_to_json,
)


def test_trace_json_fields():
    g, _ = gen_gn(2)
    trace = run_to_fixpoint(g)
    data = json.loads(trace_to_json(trace))
    assert list(data) == ["iterations", "accumulatedPotential", "iterationsExecuted"]
    assert data["iterationsExecuted"] == trace.iterations_executed
    assert list(data["iterations"][0]) == ["index", "eta", "negEdges", "minSnakeLen"]
    assert data["iterations"][0]["eta"] == trace.records[0].eta.to_list()
    assert data["iterations"][-1]["minSnakeLen"] is None


def test_trace_json_is_stable():
    g, _ = gen_gn(4)
    options = RecordOptions(reduced_weights=True)
    assert trace_to_json(run_to_fixpoint(g, record_options=options)) == \
        trace_to_json(run_to_fixpoint(g, record_options=options))


def test_save_and_load_trace(tmp_path):
    g, _ = gen_gn(3)
    trace = run_to_fixpoint(g)
    path = tmp_path / "trace.json"
    save_trace(trace, str(path))
    assert load_trace(str(path)) == trace.to_dict()


def test_load_trace_rejects_unknown_fields(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"iterations": [], "accumulatedPotential": [],
                                "iterationsExecuted": 0, "extra": 1}))
    with pytest.raises(jsonschema.ValidationError):
        load_trace(str(path))


def test_rows_to_csv():
    rows = [
        ExperimentRow("gn", 1, 6, 6, 1, [None], 1200),
        ExperimentRow("gn", 2, 10, 12, 2, [2, None], 3400),
    ]
    assert rows_to_csv(rows) == (
        "family,param,vertices,edges,iterations,wall_time_ns\n"
        "gn,1,6,6,1,1200\n"
        "gn,2,10,12,2,3400\n"
    )


def test_rows_to_csv_empty():
    assert rows_to_csv([]) == ",".join(CSV_HEADER) + "\n"


def test_save_rows_json(tmp_path):
    path = tmp_path / "rows.json"
    save_rows_json([ExperimentRow("hardpath", 3, 9, 8, 3, [1, 1, None], 10)], str(path))
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["rows"][0]["min_snake_by_iter"] == [1, 1, None]
    assert data["rows"][0]["family"] == "hardpath"


def test_save_rows_json_without_snake_stats(tmp_path):
    path = tmp_path / "rows.json"
    save_rows_json([ExperimentRow("hardpath", 3, 9, 8, 3, None, 10)], str(path))
    row = json.loads(path.read_text(encoding="utf-8"))["rows"][0]
    assert "min_snake_by_iter" not in row
    assert row["iterations"] == 3
