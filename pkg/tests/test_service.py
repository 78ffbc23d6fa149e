import json
import urllib.parse

import pytest
from fastapi.testclient import TestClient

from clusterchar.catalog import kronecker_rep
from clusterchar.quivers import kronecker, linear_an
from clusterchar.service import create_app


@pytest.fixture
def client():
    return TestClient(create_app(linear_an(4)))


class TestStatics:
    def test_quiver(self, client):
        doc = client.get("/quiver").json()
        assert doc["n"] == 4
        assert len(doc["arrows"]) == 3

    def test_cc_table(self, client):
        doc = client.get("/cc-table").json()
        assert len(doc["entries"]) == 14
        by_label = {e["label"]: e for e in doc["entries"]}
        assert by_label["[1,3]"]["cc"]["display"] == "(x1*x2 + x1*x4 + x3*x4 + x2*x3*x4)/(x1*x2*x3)"
        assert by_label["[2,2]"]["index"] == [0, -1, 1, 0]
        assert by_label["T2"]["cc"]["canonical"] == "x2"

    def test_ar_quiver(self, client):
        doc = client.get("/ar-quiver").json()
        assert len(doc["vertices"]) == 10
        assert len(doc["meshes"]) == 6

    def test_grassmannian(self, client):
        rep_json = json.dumps(kronecker_rep().to_json())
        r = client.get("/grassmannian", params={"rep": rep_json})
        assert r.status_code == 200
        doc = r.json()
        assert {"e": [1, 1], "chi": 1} in doc["table"]

    def test_grassmannian_bad_payload(self, client):
        r = client.get("/grassmannian", params={"rep": "{broken"})
        assert r.status_code == 400


class TestSessions:
    def test_create_default(self, client):
        doc = client.post("/session", json={}).json()
        assert [c["canonical"] for c in doc["seed"]["cluster"]] == ["x1", "x2", "x3", "x4"]
        assert [s["label"] for s in doc["ct"]["summands"]] == ["T1", "T2", "T3", "T4"]
        assert doc["history"] == []

    def test_mutate_and_restore(self, client):
        sid = client.post("/session", json={}).json()["id"]
        doc = client.post(f"/session/{sid}/mutate", json={"vertex": 2}).json()
        assert doc["variable"]["display"] == "(x1 + x3)/x2"
        assert doc["ct"]["summands"][1]["label"] == "[2,2]"
        doc2 = client.post(f"/session/{sid}/mutate", json={"vertex": 2}).json()
        assert [c["canonical"] for c in doc2["seed"]["cluster"]] == ["x1", "x2", "x3", "x4"]
        assert doc2["history"] == [2, 2]

    def test_seed_and_ct_stay_synchronized(self, client):
        sid = client.post("/session", json={}).json()["id"]
        for vertex in (2, 1, 3, 2, 4):
            doc = client.post(f"/session/{sid}/mutate", json={"vertex": vertex}).json()
            cluster = [c["canonical"] for c in doc["seed"]["cluster"]]
            summand_ccs = [s["cc"]["canonical"] for s in doc["ct"]["summands"]]
            assert cluster == summand_ccs

    def test_unknown_session(self, client):
        assert client.get("/session/nope").status_code == 404
        r = client.post("/session/nope/mutate", json={"vertex": 1})
        assert r.status_code == 404

    def test_bad_vertex(self, client):
        sid = client.post("/session", json={}).json()["id"]
        assert client.post(f"/session/{sid}/mutate", json={"vertex": 9}).status_code == 400
        assert client.post(f"/session/{sid}/mutate", json={}).status_code == 400

    def test_kronecker_session_has_no_ct(self, client):
        doc = client.post("/session", json={"quiver": kronecker().to_json()}).json()
        assert doc["ct"] is None
        sid = doc["id"]
        doc = client.post(f"/session/{sid}/mutate", json={"vertex": 1}).json()
        assert doc["variable"]["display"] == "(1 + x2^2)/x1"

    def test_mutable_quiver_required(self, client):
        loop = {"n": 1, "arrows": [{"id": "a1", "s": 1, "t": 1}]}
        assert client.post("/session", json={"quiver": loop}).status_code == 400

    def test_replay_determinism(self, client):
        sid = client.post("/session", json={}).json()["id"]
        for vertex in (2, 3, 1):
            client.post(f"/session/{sid}/mutate", json={"vertex": vertex})
        final = client.get(f"/session/{sid}").json()
        snapshot = client.get(f"/session/{sid}/snapshot").json()
        replayed = client.post("/session/import", json=snapshot).json()
        assert replayed["seed"] == final["seed"]
        assert replayed["ct"] == final["ct"]
        assert replayed["history"] == final["history"]

    def test_repeated_get_is_stable(self, client):
        sid = client.post("/session", json={}).json()["id"]
        client.post(f"/session/{sid}/mutate", json={"vertex": 1})
        a = client.get(f"/session/{sid}").json()
        b = client.get(f"/session/{sid}").json()
        assert a == b
