//! Campaign driver: checks each claim over enumerated or constructed
//! graphs, surveys extremal ratios, and writes reports.

mod claims;
mod config;
mod report;
mod survey;

pub use claims::{
    sort_records, verify_claim, CampaignParams, ClaimId, Relation, VerificationRecord,
};
pub use config::Config;
pub use report::{
    read_graph, read_text, render_csv, render_json, report_write, write_text, Report, ReportFormat,
};
pub use survey::{reference_constant, render_ratio, survey, SurveyRecord};
