use crate::source::{HttpRequest, HttpResponse, Transport};

/// Blocking transport backed by `ureq`. A fresh agent per request keeps
/// the per-request timeout exact.
#[derive(Debug, Default, Clone, Copy)]
pub struct UreqTransport;

impl Transport for UreqTransport {
    fn get(&self, request: &HttpRequest) -> Result<HttpResponse, String> {
        let agent: ureq::Agent = ureq::Agent::config_builder()
            .timeout_global(Some(request.timeout))
            .http_status_as_error(false)
            .build()
            .into();
        let mut builder = agent.get(&request.url);
        for (k, v) in &request.query {
            builder = builder.query(k, v);
        }
        for (k, v) in &request.headers {
            builder = builder.header(k, v);
        }
        let mut response = builder.call().map_err(|e| e.to_string())?;
        let status = response.status().as_u16();
        let body = response
            .body_mut()
            .read_to_string()
            .map_err(|e| e.to_string())?;
        Ok(HttpResponse { status, body })
    }
}
