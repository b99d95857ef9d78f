/** DOM glue: wires the search box, result table and insert form to the
 * service. Searches fire on explicit submit; one search is in flight at a
 * time and a newer submit wins over a slower older response. On errors the
 * last successful table stays on screen under an error banner. */

import { ApiError, getRecord, insertRecord, searchRecords } from "./api.js";
import {
  renderError,
  renderNotice,
  renderRecordDetail,
  renderResultsTable,
} from "./render.js";

const BASE = "";
const TABLE = "citizen";
const FIELD_NAMES = [
  "name", "division", "district", "upazila",
  "union", "village", "occupation", "phone",
];
const TOKEN_KEY = "phonosearch.token";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

let searchGeneration = 0;

async function runSearch(): Promise<void> {
  const input = el<HTMLInputElement>("search-input");
  const banner = el<HTMLDivElement>("search-banner");
  const results = el<HTMLDivElement>("results");
  const query = input.value.trim();
  if (!query) {
    banner.innerHTML = renderNotice("Type something to search for.");
    return;
  }
  const generation = ++searchGeneration;
  banner.innerHTML = renderNotice("Searching…");
  try {
    const hits = await searchRecords(BASE, query);
    if (generation !== searchGeneration) return; // a newer search won
    banner.innerHTML = "";
    results.innerHTML = renderResultsTable(hits);
  } catch (err) {
    if (generation !== searchGeneration) return;
    // keep the previous table; just explain what happened
    banner.innerHTML = renderError(describe(err));
  }
}

async function toggleDetail(row: HTMLTableRowElement): Promise<void> {
  const next = row.nextElementSibling;
  if (next && next.classList.contains("detail")) {
    next.remove();
    return;
  }
  const pValue = Number(row.dataset.p);
  try {
    const fields = await getRecord(BASE, TABLE, pValue);
    const detail = document.createElement("tr");
    detail.classList.add("detail");
    const cell = detail.insertCell();
    cell.colSpan = 4;
    cell.innerHTML = renderRecordDetail(fields);
    row.after(detail);
  } catch (err) {
    el<HTMLDivElement>("search-banner").innerHTML = renderError(describe(err));
  }
}

async function runInsert(): Promise<void> {
  const banner = el<HTMLDivElement>("insert-banner");
  const values: string[] = [];
  for (const name of FIELD_NAMES) {
    const field = el<HTMLInputElement>(`field-${name}`);
    if (!field.value.trim()) {
      banner.innerHTML = renderError(`"${name}" is required.`);
      field.focus();
      return;
    }
    values.push(field.value.trim());
  }
  const token = el<HTMLInputElement>("token-input").value.trim();
  sessionStorage.setItem(TOKEN_KEY, token);
  try {
    const pointer = await insertRecord(BASE, TABLE, values, token);
    banner.innerHTML = renderNotice(
      `Stored as pointer (${pointer.table_id}, ${pointer.p_value}).`);
    for (const name of FIELD_NAMES) {
      el<HTMLInputElement>(`field-${name}`).value = "";
    }
  } catch (err) {
    banner.innerHTML = renderError(describe(err));
  }
}

function describe(err: unknown): string {
  if (err instanceof ApiError) {
    return err.kind === "auth"
      ? `Not authorized: ${err.message} (set the API token below)`
      : `${err.kind}: ${err.message}`;
  }
  return "Service unreachable.";
}

export function start(): void {
  el<HTMLFormElement>("search-form").addEventListener("submit", (event) => {
    event.preventDefault();
    void runSearch();
  });
  el<HTMLDivElement>("results").addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    if (target.classList.contains("more-btn")) {
      void toggleDetail(target.closest("tr") as HTMLTableRowElement);
    }
  });
  el<HTMLFormElement>("insert-form").addEventListener("submit", (event) => {
    event.preventDefault();
    void runInsert();
  });
  el<HTMLInputElement>("token-input").value =
    sessionStorage.getItem(TOKEN_KEY) ?? "";
}

start();
