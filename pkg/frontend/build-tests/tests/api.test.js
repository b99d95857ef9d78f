import assert from "node:assert/strict";
import { test } from "node:test";
import { ApiError, insertRecord, searchRecords } from "../src/api.js";
function stubFetch(status, body) {
    return async () => new Response(JSON.stringify(body), {
        status,
        headers: { "Content-Type": "application/json" },
    });
}
test("non-2xx responses become typed ApiErrors", async () => {
    const original = globalThis.fetch;
    try {
        globalThis.fetch = stubFetch(400, { error: "validation", message: "no searchable terms" });
        await assert.rejects(() => searchRecords("", "8801700041114"), (err) => {
            assert.ok(err instanceof ApiError);
            assert.equal(err.status, 400);
            assert.equal(err.kind, "validation");
            assert.equal(err.message, "no searchable terms");
            return true;
        });
    }
    finally {
        globalThis.fetch = original;
    }
});
test("auth failures carry the auth kind", async () => {
    const original = globalThis.fetch;
    try {
        globalThis.fetch = stubFetch(401, { error: "auth", message: "missing or invalid API token" });
        await assert.rejects(() => insertRecord("", "citizen", ["x"], ""), (err) => err instanceof ApiError && err.kind === "auth");
    }
    finally {
        globalThis.fetch = original;
    }
});
test("query strings are encoded", async () => {
    const original = globalThis.fetch;
    const urls = [];
    try {
        globalThis.fetch = (async (input) => {
            urls.push(String(input));
            return new Response("[]", { status: 200 });
        });
        await searchRecords("", "Abdullah khuln & co", 10);
        assert.equal(urls[0], "/search?q=Abdullah%20khuln%20%26%20co&limit=10");
    }
    finally {
        globalThis.fetch = original;
    }
});
