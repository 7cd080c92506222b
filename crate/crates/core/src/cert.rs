use serde::{Deserialize, Serialize};
use serde_json::Value;

/// A machine-checkable verdict together with the data that supports it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: bool,
    pub method: String,
    pub witness: Value,
    pub dims: Value,
}

impl Certificate {
    pub fn new(verdict: bool, method: &str, witness: Value, dims: Value) -> Self {
        Certificate { verdict, method: method.to_string(), witness, dims }
    }

    pub fn pass(method: &str) -> Self {
        Self::new(true, method, Value::Null, Value::Object(Default::default()))
    }

    pub fn fail(method: &str, witness: Value) -> Self {
        Self::new(false, method, witness, Value::Object(Default::default()))
    }
}
