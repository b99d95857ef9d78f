/** End-to-end smoke: boots the real service, then drives the client the
 * same way the page does — insert, live search with a misspelled query,
 * and the "More" record expansion — over real HTTP. */

import assert from "node:assert/strict";
import { spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { after, before, test } from "node:test";

import { ApiError, getRecord, insertRecord, searchRecords } from "../src/api.js";
import { renderRecordDetail, renderResultsTable } from "../src/render.js";

const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;
const TOKEN = "e2e-token";
const ROW = ["Rahim", "Rangpur", "Dinajpur", "Birganj",
  "Mohanpur", "Rampur", "Farmer", "8801700012345"];

let server: ChildProcess;
let dataDir: string;

before(async () => {
  dataDir = mkdtempSync(join(tmpdir(), "phonosearch-e2e-"));
  server = spawn("python3", ["-m", "phonosearch.cli", "serve",
    "--bind", `127.0.0.1:${PORT}`, "--data-dir", dataDir, "--token", TOKEN],
    { stdio: "ignore" });
  for (let attempt = 0; attempt < 60; attempt++) {
    try {
      const response = await fetch(`${BASE}/search?q=warmup`);
      if (response.status === 200) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error("service did not come up");
});

after(() => {
  server.kill();
  rmSync(dataDir, { recursive: true, force: true });
});

test("insert round-trip returns a pointer and is immediately findable", async () => {
  const pointer = await insertRecord(BASE, "citizen", ROW, TOKEN);
  assert.deepEqual(pointer, { table_id: 0, p_value: 1 });

  const hits = await searchRecords(BASE, "Rahim Dinajpur");
  assert.equal(hits.length, 1);
  assert.equal(hits[0].pointer.p_value, 1);
  assert.equal(hits[0].matched_percent, 100);
});

test("misspelled live search still finds the record, table renders ranked", async () => {
  await insertRecord(BASE, "citizen",
    ["Abdullah", "Khulna", "Chandpur", "Haimchar", "Naikhong", "Gorea",
      "Employee", "8801700041114"], TOKEN);
  const hits = await searchRecords(BASE, "Raheem Dinajpur");
  assert.ok(hits.length >= 1);
  assert.equal(hits[0].matched_info.split(",")[0].trim(), "Rahim");
  assert.ok(hits[0].matched_percent >= 90);

  const html = renderResultsTable(hits);
  assert.ok(html.includes("<td class=\"serial\">1</td>"));
  assert.ok(html.includes("Rahim"));
});

test("More expansion fetches and renders the full record", async () => {
  const hits = await searchRecords(BASE, "Rahim");
  const fields = await getRecord(BASE, "citizen", hits[0].pointer.p_value);
  assert.equal(fields["name"], "Rahim");
  assert.equal(fields["district"], "Dinajpur");
  const html = renderRecordDetail(fields);
  for (const value of ROW) {
    assert.ok(html.includes(value), value);
  }
});

test("mutations without the token are refused as auth errors", async () => {
  await assert.rejects(
    () => insertRecord(BASE, "citizen", ROW, ""),
    (err: unknown) => err instanceof ApiError && err.kind === "auth" && err.status === 401,
  );
});

test("digits-only query is rejected as unsearchable", async () => {
  await assert.rejects(
    () => searchRecords(BASE, "8801700041114"),
    (err: unknown) => err instanceof ApiError && err.kind === "validation",
  );
});
