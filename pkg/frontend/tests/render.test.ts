import assert from "node:assert/strict";
import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { test } from "node:test";
import { fileURLToPath } from "node:url";

import type { RecordFields, SearchHit } from "../src/api.js";
import {
  escapeHtml,
  renderError,
  renderRecordDetail,
  renderResultsTable,
} from "../src/render.js";

const here = dirname(fileURLToPath(import.meta.url));

function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "../../fixtures", name), "utf-8")) as T;
}

test("search fixture renders the four-column table", () => {
  const hits = fixture<SearchHit[]>("search_response.json");
  const html = renderResultsTable(hits);
  for (const header of ["Serial No.", "Matched Info", "Matched (%)", "More Info"]) {
    assert.ok(html.includes(`<th>${header}</th>`), header);
  }
  assert.equal((html.match(/<tr data-table=/g) ?? []).length, hits.length);
  assert.equal((html.match(/class="more-btn"/g) ?? []).length, hits.length);
});

test("rows keep server order, never re-sorted client-side", () => {
  const hits = fixture<SearchHit[]>("search_response.json");
  // the recorded response is ranked: full matches first, then partials
  const percents = hits.map((h) => h.matched_percent);
  assert.deepEqual(percents.slice(0, 7), [95, 95, 95, 95, 95, 95, 95]);
  assert.ok(percents[7] < 95 && percents[8] < 95);

  const html = renderResultsTable(hits);
  const serials = [...html.matchAll(/<td class="serial">(\d+)<\/td>/g)].map((m) => Number(m[1]));
  assert.deepEqual(serials, hits.map((h) => h.serial_no));
  const rendered = [...html.matchAll(/<td class="percent">(\d+)<\/td>/g)].map((m) => Number(m[1]));
  assert.deepEqual(rendered, percents);

  // even if the fixture were shuffled, rendering must follow input order
  const reversed = [...hits].reverse();
  const reversedSerials = [...renderResultsTable(reversed)
    .matchAll(/<td class="serial">(\d+)<\/td>/g)].map((m) => Number(m[1]));
  assert.deepEqual(reversedSerials, reversed.map((h) => h.serial_no));
});

test("every row carries its data pointer for the More expansion", () => {
  const hits = fixture<SearchHit[]>("search_response.json");
  const html = renderResultsTable(hits);
  for (const hit of hits) {
    assert.ok(html.includes(`data-p="${hit.pointer.p_value}"`));
  }
});

test("empty result set renders an explicit no-matches state", () => {
  assert.ok(renderResultsTable([]).includes("No matches"));
});

test("record fixture renders one detail row per field", () => {
  const fields = fixture<RecordFields>("record_response.json");
  const html = renderRecordDetail(fields);
  for (const [name, value] of Object.entries(fields)) {
    assert.ok(html.includes(`<span class="field-name">${name}</span>`), name);
    assert.ok(html.includes(value), value);
  }
  assert.equal((html.match(/class="detail-row"/g) ?? []).length,
    Object.keys(fields).length);
});

test("markup in field values is escaped", () => {
  const hostile: SearchHit = {
    serial_no: 1,
    matched_info: `<script>alert("x")</script>`,
    matched_percent: 50,
    pointer: { table_id: 0, p_value: 1 },
  };
  const html = renderResultsTable([hostile]);
  assert.ok(!html.includes("<script>"));
  assert.ok(html.includes("&lt;script&gt;"));
  assert.equal(escapeHtml(`a&"b<c>`), "a&amp;&quot;b&lt;c&gt;");
  assert.ok(renderError("<b>boom</b>").includes("&lt;b&gt;boom&lt;/b&gt;"));
});
