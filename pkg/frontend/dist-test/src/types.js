// Payload shapes of the session service.  The explorer never computes any
// algebra: whatever these carry is displayed verbatim.
export {};
