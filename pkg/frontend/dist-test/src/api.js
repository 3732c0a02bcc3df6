// Thin typed client over the session endpoints.  Non-2xx responses raise
// ServiceError carrying the service's own reason string.
export class ServiceError extends Error {
    constructor(status, detail) {
        super(detail);
        this.status = status;
        this.detail = detail;
    }
}
async function request(url, method, body) {
    const response = await fetch(url, {
        method,
        headers: body === undefined ? {} : { "Content-Type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
    });
    const text = await response.text();
    if (!response.ok) {
        let detail = text;
        try {
            detail = JSON.parse(text).detail;
        }
        catch {
            // non-JSON error body: show it as-is
        }
        throw new ServiceError(response.status, detail);
    }
    return JSON.parse(text);
}
export class Api {
    constructor(base) {
        this.base = base.replace(/\/$/, "");
    }
    createSession(config) {
        return request(`${this.base}/session`, "POST", config);
    }
    getState(id) {
        return request(`${this.base}/session/${id}`, "GET");
    }
    mutate(id, k) {
        return request(`${this.base}/session/${id}/mutate`, "POST", { k });
    }
    boxmove(id, s) {
        return request(`${this.base}/session/${id}/boxmove`, "POST", { s });
    }
    undo(id) {
        return request(`${this.base}/session/${id}/undo`, "POST");
    }
    quiver(id) {
        return request(`${this.base}/session/${id}/quiver`, "GET");
    }
    variables(id) {
        return request(`${this.base}/session/${id}/variables`, "GET");
    }
}
