"""Drive the HTTP session service end to end, the way the explorer does."""

import json
import threading
import urllib.request

from iboxes.service import serve

server = serve(0, "127.0.0.1")
threading.Thread(target=server.serve_forever, daemon=True).start()
url = f"http://127.0.0.1:{server.server_address[1]}"
print("service at", url)


def call(path, method="GET", payload=None):
    data = json.dumps(payload).encode() if payload is not None else None
    req = urllib.request.Request(url + path, data=data, method=method)
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read())


state = call("/session", "POST", {"type": "A3", "chain": "0:LL"})
sid = state["id"]
print("\nsession", sid, "opened with boxes", [p["box"] for p in state["positions"]])

state = call(f"/session/{sid}/mutate", "POST", {"k": 1})
print("after mutating position 1:")
for p in state["positions"]:
    print(f"    {p['index']}: box {p['box']}  kr={p['kr']}  {p['laurent']}")

state = call(f"/session/{sid}/undo", "POST")
print("\nafter undo, history =", state["history"])

state = call(f"/session/{sid}/boxmove", "POST", {"s": 1})
print("after the box move at 1, chain =", state["chain"])

print("\nvariables endpoint:")
for entry in call(f"/session/{sid}/variables"):
    print("   ", entry)

server.shutdown()
server.server_close()
