/** HTML producers for the views.
 *
 * Pure string functions so the rendering is testable against recorded API
 * fixtures without a browser. Rows are rendered exactly in server order;
 * ranking is the server's job and the client never re-sorts.
 */

import type { RecordFields, SearchHit } from "./api.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderResultsTable(hits: SearchHit[]): string {
  if (hits.length === 0) {
    return `<p class="empty">No matches.</p>`;
  }
  const rows = hits
    .map(
      (hit) => `<tr data-table="${hit.pointer.table_id}" data-p="${hit.pointer.p_value}">
  <td class="serial">${hit.serial_no}</td>
  <td class="info">${escapeHtml(hit.matched_info)}</td>
  <td class="percent">${hit.matched_percent}</td>
  <td class="more"><button type="button" class="more-btn" data-p="${hit.pointer.p_value}">More</button></td>
</tr>`,
    )
    .join("\n");
  return `<table class="results">
<thead><tr><th>Serial No.</th><th>Matched Info</th><th>Matched (%)</th><th>More Info</th></tr></thead>
<tbody>
${rows}
</tbody>
</table>`;
}

export function renderRecordDetail(fields: RecordFields): string {
  const rows = Object.entries(fields)
    .map(
      ([name, value]) =>
        `<div class="detail-row"><span class="field-name">${escapeHtml(name)}</span>` +
        `<span class="field-value">${escapeHtml(value)}</span></div>`,
    )
    .join("");
  return `<div class="record-detail">${rows}</div>`;
}

export function renderError(message: string): string {
  return `<div class="banner error">${escapeHtml(message)}</div>`;
}

export function renderNotice(message: string): string {
  return `<div class="banner notice">${escapeHtml(message)}</div>`;
}
