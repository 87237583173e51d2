use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Flag,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Flag => "FLAG",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Claim {
    pub name: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InstanceReport {
    pub campaign: &'static str,
    pub id: usize,
    pub instance: String,
    pub values: Map<String, Value>,
    pub claims: Vec<Claim>,
    pub certificates: Map<String, Value>,
    pub wall_ms: f64,
}

impl InstanceReport {
    pub(crate) fn new(campaign: &'static str, id: usize, instance: String) -> Self {
        InstanceReport {
            campaign,
            id,
            instance,
            values: Map::new(),
            claims: Vec::new(),
            certificates: Map::new(),
            wall_ms: 0.0,
        }
    }

    pub(crate) fn value(&mut self, key: &str, v: impl Into<Value>) {
        self.values.insert(key.to_string(), v.into());
    }

    pub(crate) fn claim(&mut self, name: &'static str, status: Status) {
        self.claims.push(Claim {
            name,
            status,
            detail: None,
        });
    }

    pub(crate) fn claim_with(&mut self, name: &'static str, status: Status, detail: String) {
        self.claims.push(Claim {
            name,
            status,
            detail: Some(detail),
        });
    }

    pub fn status_of(&self, name: &str) -> Option<Status> {
        self.claims
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.status)
    }

    pub fn failed(&self) -> bool {
        self.claims.iter().any(|c| c.status == Status::Fail)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text_line(&self) -> String {
        let claims: Vec<String> = self
            .claims
            .iter()
            .map(|c| format!("{} {}", c.status.as_str(), c.name))
            .collect();
        format!(
            "{} #{} {}: {}",
            self.campaign,
            self.id,
            self.instance,
            claims.join(", ")
        )
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub instances: usize,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub flag: usize,
    /// Failed cross-checks between the two engines.
    pub mismatches: usize,
}

impl Summary {
    pub fn of(reports: &[InstanceReport]) -> Self {
        let mut s = Summary {
            instances: reports.len(),
            ..Summary::default()
        };
        for c in reports.iter().flat_map(|r| &r.claims) {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => {
                    s.fail += 1;
                    if c.name == "engines_agree" {
                        s.mismatches += 1;
                    }
                }
                Status::Skip => s.skip += 1,
                Status::Flag => s.flag += 1,
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.fail == 0
    }
}
