/** End-to-end tests against the real Python service over HTTP.
 *
 * The suite spawns the service on an ephemeral port, drives it exactly the
 * way the UI does (via ApiClient), and checks the scripted session returns
 * to its starting state bit for bit.
 */

import { type ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import type { Pair, StateView } from "../src/types.js";

let child: ChildProcess;
let client: ApiClient;

function startService(): Promise<string> {
  return new Promise((resolve, reject) => {
    child = spawn(
      "python3",
      ["-u", "-c", "from mutanta.service import serve; serve(host='127.0.0.1', port=0)"],
      { stdio: ["ignore", "pipe", "pipe"] },
    );
    let buffer = "";
    const timer = setTimeout(
      () => reject(new Error(`service did not start: ${buffer}`)),
      15000,
    );
    child.stdout!.on("data", (chunk: Buffer) => {
      buffer += chunk.toString();
      const match = buffer.match(/listening on (http:\/\/[\d.]+:\d+)/);
      if (match) {
        clearTimeout(timer);
        resolve(match[1]!);
      }
    });
    child.stderr!.on("data", (chunk: Buffer) => {
      buffer += chunk.toString();
    });
    child.on("exit", (code) => {
      clearTimeout(timer);
      reject(new Error(`service exited early (${code}): ${buffer}`));
    });
  });
}

beforeAll(async () => {
  const base = await startService();
  client = new ApiClient(base);
}, 20000);

afterAll(() => {
  child?.kill();
});

function findReplacement(before: StateView, after: StateView): number {
  const previous = new Set(before.diagonals.map((d) => d.join(",")));
  const added = after.diagonals.findIndex((d) => !previous.has(d.join(",")));
  expect(added).toBeGreaterThanOrEqual(0);
  return added;
}

describe("scripted explorer session", () => {
  it("flip, mutate the corresponding vertex, undo twice: back to start bit-exactly", async () => {
    const session = await client.createSession(3);
    const initial = session.state;
    expect(initial.polygon_size).toBe(6);
    expect(initial.diagonals).toEqual([
      [0, 2],
      [0, 3],
      [0, 4],
    ]);

    const afterFlip = await client.flip(session.id, initial.diagonals[0] as Pair);
    expect(afterFlip).not.toEqual(initial);

    // mutating the vertex of the replacement diagonal flips it straight back
    const vertex = findReplacement(initial, afterFlip);
    const afterMutate = await client.mutate(session.id, vertex);
    expect(JSON.stringify(afterMutate)).toBe(JSON.stringify(initial));

    const afterUndo1 = await client.undo(session.id);
    expect(JSON.stringify(afterUndo1)).toBe(JSON.stringify(afterFlip));
    const afterUndo2 = await client.undo(session.id);
    expect(JSON.stringify(afterUndo2)).toBe(JSON.stringify(initial));
  });

  it("mutate equals flip at the same index, byte for byte", async () => {
    const first = await client.createSession(4);
    const second = await client.createSession(4);
    const target = first.state.diagonals[2] as Pair;
    const byFlip = await client.flip(first.id, target);
    const byMutate = await client.mutate(second.id, 2);
    expect(JSON.stringify(byMutate)).toBe(JSON.stringify(byFlip));
  });

  it("rotation by the polygon size is the identity", async () => {
    const session = await client.createSession(3);
    const rotated = await client.rotate(session.id, 6);
    expect(JSON.stringify(rotated)).toBe(JSON.stringify(session.state));
  });
});

describe("catalog page", () => {
  it("shows exactly 4 quivers for rank 3", async () => {
    const catalog = await client.catalog(3);
    expect(catalog.count).toBe(4);
    expect(catalog.quivers).toHaveLength(4);
    for (const quiver of catalog.quivers) {
      expect(quiver.n).toBe(3);
    }
  });
});

describe("error surfaces", () => {
  it("flip of an absent diagonal raises a structured 409", async () => {
    const session = await client.createSession(2);
    await expect(client.flip(session.id, [1, 3])).rejects.toMatchObject({
      name: "ApiError",
      status: 409,
      code: "diagonal_not_present",
    });
  });

  it("undo with no history raises a structured 409", async () => {
    const session = await client.createSession(2);
    await expect(client.undo(session.id)).rejects.toMatchObject({
      status: 409,
      code: "empty_history",
    });
  });

  it("unknown session raises 404", async () => {
    const err = await client
      .mutate("0".repeat(32), 0)
      .then(() => null)
      .catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).status).toBe(404);
  });

  it("bad rank raises 400", async () => {
    await expect(client.createSession(1)).rejects.toMatchObject({ status: 400 });
  });
});
