import json
import threading
import urllib.error
import urllib.request

import pytest

from iboxes.service import serve


@pytest.fixture()
def server_url(tmp_path):
    server = serve(0, "127.0.0.1", state_file=str(tmp_path / "sessions.json"))
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}"
    server.shutdown()
    server.server_close()


def call(url, method="GET", payload=None):
    data = json.dumps(payload).encode() if payload is not None else None
    req = urllib.request.Request(url, data=data, method=method)
    if data:
        req.add_header("Content-Type", "application/json")
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, json.loads(resp.read())
    except urllib.error.HTTPError as exc:
        body = exc.read()
        return exc.code, json.loads(body) if body else {}


def make_session(url, **overrides):
    payload = {"type": "A3", "chain": "0:LL"}
    payload.update(overrides)
    return call(f"{url}/session", "POST", payload)


def test_create_session_worked_example(server_url):
    status, state = make_session(server_url)
    assert status == 200
    assert state["range"] == [-2, 0]
    assert len(state["positions"]) == 3
    frozen = [p["index"] for p in state["positions"] if p["frozen"]]
    assert frozen == [2, 3]
    assert state["positions"][0]["kr"] is not None


def test_create_session_errors(server_url):
    status, body = call(f"{server_url}/session", "POST", {"type": "H9"})
    assert status == 400 and "error" in body
    status, _ = call(f"{server_url}/session", "POST", {"type": "A3"})
    assert status == 400
    status, _ = call(f"{server_url}/session", "POST", {"type": "A3", "chain": "0:LL", "range": [0, 5]})
    assert status == 400


def test_unknown_session_404(server_url):
    status, body = call(f"{server_url}/session/deadbeef")
    assert status == 404
    assert "detail" in body


def test_mutate_frozen_409(server_url):
    _, state = make_session(server_url)
    sid = state["id"]
    status, body = call(f"{server_url}/session/{sid}/mutate", "POST", {"k": 2})
    assert status == 409
    assert body["detail"] == "frozen vertex"


def test_mutate_updates_variable_and_clears_label(server_url):
    _, state = make_session(server_url)
    sid = state["id"]
    status, state = call(f"{server_url}/session/{sid}/mutate", "POST", {"k": 1})
    assert status == 200
    pos = state["positions"][0]
    assert pos["kr"] is None
    assert sorted(pos["laurent"].split(" + ")) == ["x[-1]*x[0]^-1", "x[-2,0]*x[0]^-1"]


def test_boxmove_and_undo_roundtrip(server_url):
    _, state0 = make_session(server_url)
    sid = state0["id"]
    _, state1 = call(f"{server_url}/session/{sid}/boxmove", "POST", {"s": 1})
    assert state1["chain"] == {"a": -1, "code": "RL"}
    _, state2 = call(f"{server_url}/session/{sid}/undo", "POST")
    state2.pop("history")
    ref = dict(state0)
    ref.pop("history")
    assert state2 == ref


def test_boxmove_illegal_409(server_url):
    _, state = make_session(server_url)
    sid = state["id"]
    status, body = call(f"{server_url}/session/{sid}/boxmove", "POST", {"s": 5})
    assert status == 409
    assert "not movable" in body["detail"]


def test_undo_empty_history_409(server_url):
    _, state = make_session(server_url)
    status, _ = call(f"{server_url}/session/{state['id']}/undo", "POST")
    assert status == 409


def test_tsystem_move_relabels_box(server_url):
    _, state = make_session(server_url, chain="-1:RL")
    sid = state["id"]
    _, state = call(f"{server_url}/session/{sid}/boxmove", "POST", {"s": 2})
    boxes = [tuple(p["box"]) for p in state["positions"]]
    assert boxes == [(-1, -1), (-2, -2), (-2, 0)]
    # the new variable is still a KR class (reference and working agree)
    assert all(p["kr"] is not None for p in state["positions"])


def test_variables_endpoint_matches_state(server_url):
    _, state = make_session(server_url)
    sid = state["id"]
    call(f"{server_url}/session/{sid}/mutate", "POST", {"k": 1})
    _, state = call(f"{server_url}/session/{sid}")
    _, variables = call(f"{server_url}/session/{sid}/variables")
    trimmed = [
        {"index": p["index"], "box": p["box"], "kr": p["kr"], "laurent": p["laurent"]}
        for p in state["positions"]
    ]
    assert variables == trimmed


def test_quiver_endpoint(server_url):
    _, state = make_session(server_url)
    sid = state["id"]
    status, quiver = call(f"{server_url}/session/{sid}/quiver")
    assert status == 200
    assert sorted(tuple(a) for a in quiver["arrows"]) == [(1, 3), (2, 1)]
    req = urllib.request.Request(f"{server_url}/session/{sid}/quiver?format=dot")
    with urllib.request.urlopen(req) as resp:
        dot = resp.read().decode()
    assert dot.startswith("digraph {")


def test_replay_determinism(server_url):
    _, state = make_session(server_url, chain="-1:RL")
    sid = state["id"]
    ops = [
        ("boxmove", {"s": 2}),
        ("mutate", {"k": 2}),
        ("mutate", {"k": 2}),
        ("boxmove", {"s": 1}),
    ]
    for op, payload in ops:
        status, state = call(f"{server_url}/session/{sid}/{op}", "POST", payload)
        assert status == 200
    # undo everything; final state equals the initial one
    for _ in ops:
        _, state = call(f"{server_url}/session/{sid}/undo", "POST")
    _, fresh = make_session(server_url, chain="-1:RL")
    for key in ("chain", "positions", "b", "movable"):
        assert state[key] == fresh[key]


def test_persistence_restores_sessions(tmp_path):
    state_file = str(tmp_path / "persist.json")
    server = serve(0, "127.0.0.1", state_file=state_file)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    url = f"http://127.0.0.1:{server.server_address[1]}"
    _, state = make_session(url)
    sid = state["id"]
    call(f"{url}/session/{sid}/boxmove", "POST", {"s": 1})
    _, before = call(f"{url}/session/{sid}")
    server.shutdown()
    server.server_close()

    server2 = serve(0, "127.0.0.1", state_file=state_file)
    thread2 = threading.Thread(target=server2.serve_forever, daemon=True)
    thread2.start()
    url2 = f"http://127.0.0.1:{server2.server_address[1]}"
    _, after = call(f"{url2}/session/{sid}")
    assert after == before
    server2.shutdown()
    server2.server_close()
