//! Verification campaigns over exhaustive small-instance families.
//!
//! Each campaign produces one [`InstanceReport`] per instance, in instance
//! order, whatever the worker schedule. A claim is PASS, FAIL, SKIP (a guard
//! stopped the check) or FLAG (a recorded finding that is not a failure).

mod campaigns;
mod report;

pub use campaigns::{run_campaign, Campaign, CampaignConfig, RunOptions};
pub use report::{Claim, InstanceReport, Status, Summary};
