/** Typed client for the record search service's JSON endpoints. */

export interface Pointer {
  table_id: number;
  p_value: number;
}

export interface SearchHit {
  serial_no: number;
  matched_info: string;
  matched_percent: number;
  pointer: Pointer;
}

export type RecordFields = Record<string, string>;

/** Error body the service returns for every non-2xx response. */
export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly kind: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function fail(response: Response): Promise<never> {
  let kind = "internal";
  let message = `request failed with status ${response.status}`;
  try {
    const body = (await response.json()) as { error?: string; message?: string };
    if (body.error) kind = body.error;
    if (body.message) message = body.message;
  } catch {
    // non-JSON error body; keep the generic message
  }
  throw new ApiError(response.status, kind, message);
}

export async function searchRecords(
  base: string,
  query: string,
  limit = 50,
): Promise<SearchHit[]> {
  const url = `${base}/search?q=${encodeURIComponent(query)}&limit=${limit}`;
  const response = await fetch(url);
  if (!response.ok) return fail(response);
  return (await response.json()) as SearchHit[];
}

export async function getRecord(
  base: string,
  table: string,
  pValue: number,
): Promise<RecordFields> {
  const response = await fetch(`${base}/tables/${table}/records/${pValue}`);
  if (!response.ok) return fail(response);
  return (await response.json()) as RecordFields;
}

export async function insertRecord(
  base: string,
  table: string,
  values: string[],
  token: string,
): Promise<Pointer> {
  const headers: Record<string, string> = { "Content-Type": "application/json" };
  if (token) headers["Authorization"] = `Bearer ${token}`;
  const response = await fetch(`${base}/tables/${table}/records`, {
    method: "POST",
    headers,
    body: JSON.stringify(values),
  });
  if (!response.ok) return fail(response);
  return (await response.json()) as Pointer;
}
