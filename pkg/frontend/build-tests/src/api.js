/** Typed client for the record search service's JSON endpoints. */
/** Error body the service returns for every non-2xx response. */
export class ApiError extends Error {
    status;
    kind;
    constructor(status, kind, message) {
        super(message);
        this.status = status;
        this.kind = kind;
        this.name = "ApiError";
    }
}
async function fail(response) {
    let kind = "internal";
    let message = `request failed with status ${response.status}`;
    try {
        const body = (await response.json());
        if (body.error)
            kind = body.error;
        if (body.message)
            message = body.message;
    }
    catch {
        // non-JSON error body; keep the generic message
    }
    throw new ApiError(response.status, kind, message);
}
export async function searchRecords(base, query, limit = 50) {
    const url = `${base}/search?q=${encodeURIComponent(query)}&limit=${limit}`;
    const response = await fetch(url);
    if (!response.ok)
        return fail(response);
    return (await response.json());
}
export async function getRecord(base, table, pValue) {
    const response = await fetch(`${base}/tables/${table}/records/${pValue}`);
    if (!response.ok)
        return fail(response);
    return (await response.json());
}
export async function insertRecord(base, table, values, token) {
    const headers = { "Content-Type": "application/json" };
    if (token)
        headers["Authorization"] = `Bearer ${token}`;
    const response = await fetch(`${base}/tables/${table}/records`, {
        method: "POST",
        headers,
        body: JSON.stringify(values),
    });
    if (!response.ok)
        return fail(response);
    return (await response.json());
}
