"""Record real service responses for the frontend contract tests.

Run from the repository root after changing the service:

    python3 scripts/record_frontend_fixtures.py
"""

import json
import pathlib

from fastapi.testclient import TestClient

from qpmut import load_example
from qpmut.service import app

OUT = pathlib.Path(__file__).parent.parent / "frontend" / "src" / "fixtures" / "diamond_flow.json"


def main():
    client = TestClient(app)
    document = load_example("diamond")
    created = client.post("/sessions", json={"document": document}).json()
    sid = created["id"]
    initial_state = client.get(f"/sessions/{sid}").json()["state"]
    # vertex 2 is classified "neither" in the initial state, so this is
    # the recorded rejection; after mutating at 1 it would be legal
    bad = client.post(f"/sessions/{sid}/steps",
                      json={"vertex": "2", "side": "left",
                            "allow_nonstrict": False})
    assert bad.status_code == 409, bad.text
    step1 = client.post(f"/sessions/{sid}/steps",
                        json={"vertex": "1", "side": "left",
                              "allow_nonstrict": False}).json()
    export_after = client.get(f"/sessions/{sid}/export",
                              params={"format": "json"}).json()
    undone = client.post(f"/sessions/{sid}/undo").json()
    assert undone["state"] == initial_state
    examples = client.get("/examples").json()
    fixture = {
        "document": document,
        "create": created,
        "initial_state": initial_state,
        "step_1_left": step1,
        "export_after_step": export_after,
        "step_2_left_error": {"status": bad.status_code, "body": bad.json()},
        "undo": undone,
        "examples": examples,
    }
    OUT.write_text(json.dumps(fixture, indent=2) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
