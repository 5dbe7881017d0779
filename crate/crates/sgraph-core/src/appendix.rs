//! The shipped reference table of Sylow-normalizer divisibility data for
//! the 26 sporadic simple groups, plus computational verification for the
//! five smallest (the only ones whose orders fit under the exhaustive cap).
//!
//! The table is stored exactly as published, typos and all — items (8) and
//! (9) claim a divisibility at 7 while listing a π that omits 7, and items
//! (25) and (26) claim one at 37 with 37 outside the listed π. Verification
//! reports compare these claims against fresh computation line by line, so
//! a shipped claim that fails recomputation is reported as a mismatch, not
//! silently corrected.

use std::collections::BTreeMap;

use crate::constructors::{janko1, janko2, mathieu};
use crate::error::Result;
use crate::graph::sylow_data;
use crate::group::PermGroup;

/// One divisibility claim: `divisor` divides the index
/// `|N_G(G_at) : C_G(G_at)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisibilityClaim {
    pub divisor: u64,
    pub at: u64,
}

const fn claim(divisor: u64, at: u64) -> DivisibilityClaim {
    DivisibilityClaim { divisor, at }
}

/// One reference-table entry: the group's name, its listed prime set, and
/// the listed divisibility claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AppendixItem {
    pub number: usize,
    pub name: &'static str,
    pub pi: &'static [u64],
    pub claims: &'static [DivisibilityClaim],
}

/// The full reference table, items (1) through (26).
pub const APPENDIX: [AppendixItem; 26] = [
    AppendixItem {
        number: 1,
        name: "M11",
        pi: &[2, 3, 5, 11],
        claims: &[claim(2, 3), claim(2, 5), claim(2, 11), claim(5, 11)],
    },
    AppendixItem {
        number: 2,
        name: "M12",
        pi: &[2, 3, 5, 11],
        claims: &[claim(2, 3), claim(2, 5), claim(2, 11), claim(5, 11)],
    },
    AppendixItem {
        number: 3,
        name: "J1",
        pi: &[2, 3, 5, 7, 11, 19],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(3, 7),
            claim(3, 19),
            claim(5, 11),
        ],
    },
    AppendixItem {
        number: 4,
        name: "M22",
        pi: &[2, 3, 5, 7, 11],
        claims: &[claim(2, 3), claim(2, 5), claim(3, 7), claim(5, 11)],
    },
    AppendixItem {
        number: 5,
        name: "J2",
        pi: &[2, 3, 5, 7],
        claims: &[claim(2, 3), claim(2, 5), claim(3, 7)],
    },
    AppendixItem {
        number: 6,
        name: "M23",
        pi: &[2, 3, 5, 7, 11, 23],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(3, 7),
            claim(5, 11),
            claim(11, 23),
        ],
    },
    AppendixItem {
        number: 7,
        name: "H5",
        pi: &[2, 3, 5, 7, 11],
        claims: &[claim(2, 3), claim(2, 5), claim(3, 7), claim(5, 11)],
    },
    AppendixItem {
        number: 8,
        name: "J3",
        pi: &[2, 3, 5, 17, 19],
        claims: &[claim(2, 3), claim(2, 5), claim(2, 7), claim(3, 19)],
    },
    AppendixItem {
        number: 9,
        name: "M24",
        pi: &[2, 3, 5, 17, 19],
        claims: &[claim(2, 3), claim(2, 5), claim(2, 7), claim(3, 19)],
    },
    AppendixItem {
        number: 10,
        name: "McL",
        pi: &[2, 3, 5, 7, 11],
        claims: &[claim(2, 3), claim(2, 5), claim(3, 7), claim(5, 11)],
    },
    AppendixItem {
        number: 11,
        name: "He",
        pi: &[2, 3, 5, 7, 17],
        claims: &[claim(2, 3), claim(2, 5), claim(2, 17), claim(3, 7)],
    },
    AppendixItem {
        number: 12,
        name: "Ru",
        pi: &[2, 3, 5, 7, 13, 29],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(3, 7),
            claim(3, 13),
            claim(7, 29),
        ],
    },
    AppendixItem {
        number: 13,
        name: "Suz",
        pi: &[2, 3, 5, 7, 11, 13],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(3, 7),
            claim(3, 13),
            claim(5, 11),
        ],
    },
    AppendixItem {
        number: 14,
        name: "O'N",
        pi: &[2, 3, 5, 7, 11, 19, 31],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(3, 7),
            claim(3, 19),
            claim(5, 11),
            claim(5, 31),
        ],
    },
    AppendixItem {
        number: 15,
        name: "Co3",
        pi: &[2, 3, 5, 7, 11, 23],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(3, 7),
            claim(5, 11),
            claim(11, 23),
        ],
    },
    AppendixItem {
        number: 16,
        name: "Co2",
        pi: &[2, 3, 5, 7, 11, 23],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(3, 7),
            claim(5, 11),
            claim(11, 23),
        ],
    },
    AppendixItem {
        number: 17,
        name: "Co1",
        pi: &[2, 3, 5, 7, 11, 13, 23],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(3, 7),
            claim(3, 13),
            claim(5, 11),
            claim(11, 23),
        ],
    },
    AppendixItem {
        number: 18,
        name: "Fi22",
        pi: &[2, 3, 5, 7, 11, 13],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(3, 7),
            claim(3, 13),
            claim(5, 11),
        ],
    },
    AppendixItem {
        number: 19,
        name: "Fi24",
        pi: &[2, 3, 5, 7, 11, 13, 17, 23, 29],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(2, 17),
            claim(3, 7),
            claim(3, 13),
            claim(5, 11),
            claim(7, 29),
            claim(11, 23),
        ],
    },
    AppendixItem {
        number: 20,
        name: "HN",
        pi: &[2, 3, 5, 7, 11, 19],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(3, 7),
            claim(3, 19),
            claim(5, 11),
        ],
    },
    AppendixItem {
        number: 21,
        name: "Ly",
        pi: &[2, 3, 5, 7, 11, 31, 37, 67],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(3, 7),
            claim(3, 37),
            claim(5, 11),
            claim(5, 31),
            claim(11, 37),
        ],
    },
    AppendixItem {
        number: 22,
        name: "Fi23",
        pi: &[2, 3, 5, 7, 11, 13, 17, 23],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(2, 17),
            claim(3, 7),
            claim(3, 13),
            claim(5, 11),
            claim(11, 23),
        ],
    },
    AppendixItem {
        number: 23,
        name: "Th",
        pi: &[2, 3, 5, 7, 11, 13, 19, 31],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(3, 7),
            claim(3, 13),
            claim(3, 19),
            claim(5, 31),
        ],
    },
    AppendixItem {
        number: 24,
        name: "J4",
        pi: &[2, 3, 5, 7, 11, 23, 29, 31, 37, 43],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(3, 7),
            claim(3, 23),
            claim(3, 37),
            claim(5, 11),
            claim(5, 31),
            claim(7, 29),
            claim(7, 43),
        ],
    },
    AppendixItem {
        number: 25,
        name: "B",
        pi: &[2, 3, 5, 7, 11, 13, 17, 19, 23, 31, 47],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(2, 17),
            claim(3, 7),
            claim(3, 13),
            claim(3, 19),
            claim(3, 37),
            claim(5, 11),
            claim(5, 23),
            claim(5, 31),
            claim(23, 47),
        ],
    },
    AppendixItem {
        number: 26,
        name: "M",
        pi: &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71],
        claims: &[
            claim(2, 3),
            claim(2, 5),
            claim(2, 17),
            claim(3, 7),
            claim(3, 13),
            claim(3, 19),
            claim(3, 37),
            claim(5, 11),
            claim(5, 23),
            claim(5, 31),
            claim(5, 41),
            claim(7, 71),
            claim(23, 47),
            claim(29, 59),
        ],
    },
];

fn normalize(name: &str) -> String {
    name.chars()
        .filter(|c| c.is_ascii_alphanumeric())
        .map(|c| c.to_ascii_lowercase())
        .collect()
}

/// Look up a reference item by name, ignoring case and punctuation
/// (`"o'n"`, `"ON"`, and `"O'N"` all find item 14).
pub fn appendix_item(name: &str) -> Option<&'static AppendixItem> {
    let wanted = normalize(name);
    APPENDIX.iter().find(|item| normalize(item.name) == wanted)
}

/// Construct the group behind a reference item, for the five items small
/// enough to verify computationally. `None` for the other 21.
pub fn computable_group(name: &str) -> Option<Result<PermGroup>> {
    match normalize(name).as_str() {
        "m11" => Some(mathieu(11)),
        "m12" => Some(mathieu(12)),
        "m22" => Some(mathieu(22)),
        "j1" => Some(janko1()),
        "j2" => Some(janko2()),
        _ => None,
    }
}

/// The stored table of one item, one statement per line.
pub fn reference_lines(item: &AppendixItem) -> Vec<String> {
    let pi: Vec<String> = item.pi.iter().map(u64::to_string).collect();
    let mut lines = vec![format!(
        "({}) {}: pi = {{{}}}",
        item.number,
        item.name,
        pi.join(",")
    )];
    for c in item.claims {
        lines.push(format!("  {} | nc_index({})", c.divisor, c.at));
    }
    lines
}

/// The recomputed fate of one claim. `nc_index` is `None` when the claim
/// names a prime that does not divide the group order (so there is no
/// Sylow subgroup to measure, and the claim fails).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub claim: DivisibilityClaim,
    pub nc_index: Option<u128>,
    pub holds: bool,
}

/// Line-by-line comparison of one reference item against fresh
/// computation on the actual group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub item: &'static AppendixItem,
    pub computed_pi: Vec<u64>,
    pub pi_matches: bool,
    pub outcomes: Vec<ClaimOutcome>,
    pub all_hold: bool,
}

/// Recompute every claim of a reference item on `g` and report each as a
/// match or mismatch. Sylow data is computed once per distinct prime.
pub fn verify_item(
    item: &'static AppendixItem,
    g: &PermGroup,
    cap: u128,
) -> Result<VerificationReport> {
    let computed_pi = g.pi();
    let pi_matches = computed_pi == item.pi;
    let mut cache: BTreeMap<u64, u128> = BTreeMap::new();
    let mut outcomes = Vec::new();
    for &c in item.claims {
        let nc_index = if computed_pi.contains(&c.at) {
            let nc = match cache.get(&c.at) {
                Some(&nc) => nc,
                None => {
                    let nc = sylow_data(g, c.at, cap)?.nc_index;
                    cache.insert(c.at, nc);
                    nc
                }
            };
            Some(nc)
        } else {
            None
        };
        let holds = nc_index.is_some_and(|nc| nc % c.divisor as u128 == 0);
        outcomes.push(ClaimOutcome {
            claim: c,
            nc_index,
            holds,
        });
    }
    let all_hold = pi_matches && outcomes.iter().all(|o| o.holds);
    Ok(VerificationReport {
        item,
        computed_pi,
        pi_matches,
        outcomes,
        all_hold,
    })
}

/// Human-readable report, one line per recomputed statement.
pub fn report_lines(report: &VerificationReport) -> Vec<String> {
    let listed: Vec<String> = report.item.pi.iter().map(u64::to_string).collect();
    let computed: Vec<String> = report.computed_pi.iter().map(u64::to_string).collect();
    let mut lines = vec![format!(
        "({}) {}: pi listed {{{}}}, computed {{{}}} — {}",
        report.item.number,
        report.item.name,
        listed.join(","),
        computed.join(","),
        if report.pi_matches {
            "match"
        } else {
            "MISMATCH"
        }
    )];
    for o in &report.outcomes {
        let computed = match o.nc_index {
            Some(nc) => format!("computed nc_index = {nc}"),
            None => "no Sylow subgroup (prime does not divide the order)".to_string(),
        };
        lines.push(format!(
            "  {} | nc_index({}): {} — {}",
            o.claim.divisor,
            o.claim.at,
            computed,
            if o.holds { "match" } else { "MISMATCH" }
        ));
    }
    lines
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_EXHAUSTIVE_CAP as CAP;

    #[test]
    fn table_shape() {
        assert_eq!(APPENDIX.len(), 26);
        for (i, item) in APPENDIX.iter().enumerate() {
            assert_eq!(item.number, i + 1);
            assert!(
                item.pi.windows(2).all(|w| w[0] < w[1]),
                "{} pi sorted",
                item.name
            );
            assert!(!item.claims.is_empty());
        }
        let mut names: Vec<String> = APPENDIX.iter().map(|i| normalize(i.name)).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), 26, "names are unique");
    }

    #[test]
    fn shipped_inconsistencies_are_preserved() {
        // Four statements in the published table name a prime outside the
        // item's own π list; the table stores them as printed.
        let mut strays = Vec::new();
        for item in &APPENDIX {
            for c in item.claims {
                if !item.pi.contains(&c.at) {
                    strays.push((item.number, c.at));
                }
            }
        }
        assert_eq!(strays, vec![(8, 7), (9, 7), (25, 37), (26, 37)]);
    }

    #[test]
    fn lookup_is_punctuation_insensitive() {
        assert_eq!(appendix_item("M11").unwrap().number, 1);
        assert_eq!(appendix_item("m11").unwrap().number, 1);
        assert_eq!(appendix_item("O'N").unwrap().number, 14);
        assert_eq!(appendix_item("on").unwrap().number, 14);
        assert_eq!(appendix_item("fi22").unwrap().number, 18);
        assert_eq!(appendix_item("M").unwrap().number, 26);
        assert_eq!(appendix_item("B").unwrap().number, 25);
        assert!(appendix_item("M13").is_none());
        assert!(appendix_item("").is_none());
    }

    #[test]
    fn computable_set_is_the_five_smallest() {
        for name in ["M11", "M12", "J1", "M22", "J2"] {
            assert!(computable_group(name).is_some(), "{name}");
        }
        for name in ["M23", "McL", "M", "B", "Ly"] {
            assert!(computable_group(name).is_none(), "{name}");
        }
    }

    #[test]
    fn reference_lines_echo_the_item() {
        let lines = reference_lines(appendix_item("J2").unwrap());
        assert_eq!(lines[0], "(5) J2: pi = {2,3,5,7}");
        assert_eq!(lines[1], "  2 | nc_index(3)");
        assert_eq!(lines[3], "  3 | nc_index(7)");
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn verification_on_the_smallest_mathieu_group() {
        let item = appendix_item("M11").unwrap();
        let g = mathieu(11).unwrap();
        let report = verify_item(item, &g, CAP).unwrap();
        assert!(report.pi_matches);
        // Fresh computation: nc_index is 16 at 3, 4 at 5, 5 at 11. Three of
        // the four stored claims hold; "2 | nc_index(11)" does not (5 is odd).
        let holds: Vec<bool> = report.outcomes.iter().map(|o| o.holds).collect();
        assert_eq!(holds, vec![true, true, false, true]);
        assert_eq!(report.outcomes[0].nc_index, Some(16));
        assert_eq!(report.outcomes[1].nc_index, Some(4));
        assert_eq!(report.outcomes[2].nc_index, Some(5));
        assert!(!report.all_hold);

        let lines = report_lines(&report);
        assert!(lines[0].contains("match"));
        assert!(lines[1].ends_with("match"));
        assert!(lines[3].ends_with("MISMATCH"));
    }
}
