"""Drive the explorer HTTP service end to end, the way the browser UI does.

The service holds sessions in memory: each starts from the fan triangulation
and accepts flip / mutate / rotate / undo moves, returning a full state view
(diagonals, quiver arrows, close-to-border flags, classifications, orbit
size) after every move.

Run with:  python demos/05_explorer_api.py
"""

import json
import threading
import urllib.request

from mutanta.service import make_server

server = make_server(port=0)
threading.Thread(target=server.serve_forever, daemon=True).start()
base = f"http://127.0.0.1:{server.server_address[1]}"
print("service at", base)


def call(method, path, body=None):
    data = json.dumps(body).encode() if body is not None else None
    req = urllib.request.Request(base + path, data=data, method=method)
    req.add_header("Content-Type", "application/json")
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read())


created = call("POST", "/session", {"n": 3})
sid = created["id"]
print("initial state:", json.dumps(created["state"], indent=2))

# Click a diagonal in the UI -> POST /flip.
after_flip = call("POST", f"/session/{sid}/flip", {"diagonal": [0, 3]})
print("after flipping [0,3]: diagonals", after_flip["diagonals"],
      "arrows", after_flip["arrows"])

# Click the matching quiver vertex instead -> same state, byte for byte.
fresh = call("POST", "/session", {"n": 3})
by_vertex = call("POST", f"/session/{fresh['id']}/mutate", {"vertex": 1})
assert json.dumps(by_vertex) == json.dumps(after_flip)
print("mutating vertex 1 gives the identical state")

# Rotate the polygon one step clockwise; the quiver class is unchanged.
rotated = call("POST", f"/session/{sid}/rotate", {"steps": 1})
print("after rotating: diagonals", rotated["diagonals"])

# Undo twice walks back to the initial state.
call("POST", f"/session/{sid}/undo")
back = call("POST", f"/session/{sid}/undo")
assert back == created["state"]
print("two undos restore the initial state")

# The catalog endpoint serves the full deduplicated quiver list per rank.
catalog = call("GET", "/catalog/3")
print(f"catalog for rank 3 has {catalog['count']} quivers:")
for entry in catalog["quivers"]:
    print("  ", entry)

server.shutdown()
