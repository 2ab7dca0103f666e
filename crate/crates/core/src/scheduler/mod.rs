//! Splitting teams into groups of three and four and scheduling three rounds
//! per group so that no problem is presented twice in a group-round.
//!
//! Within a group a schedule exists iff no problem is in more than three
//! portfolios of the group, which only constrains groups of four. A group of
//! four is therefore a color class of a nice partial coloring of the portfolio
//! triples.

mod konig;

use std::fmt;

use serde::Serialize;

use crate::coloring::{partialize, Color, Coloring};
use crate::error::Result;
use crate::general::solve_general;
use crate::predicates::{is_c_fair, special_triple, unfair_element};
use crate::triple2::color_2_triples;
use crate::tuples::{Element, KTuple, TupleSet};

pub use konig::{edge_color_bipartite, is_proper_edge_coloring, konig_edge_color, GroupBipartite, ROUNDS};

/// One team and the three problems it prepared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Portfolio {
    pub team: String,
    pub problems: KTuple,
}

/// Why no grouping exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infeasible {
    /// `n` cannot be written as `3a + 4b` with the needed number of fours.
    TooFewTeams { n: usize },
    /// A problem is missing from fewer portfolios than there are groups of four.
    ProblemTooCommon { problem: Element, groups_of_four: usize },
    /// The portfolios form the special pattern.
    Special { repeated: [Element; 3] },
}

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infeasible::TooFewTeams { n } => {
                write!(f, "{n} teams cannot be split into groups of 3 and 4")
            }
            Infeasible::ProblemTooCommon {
                problem,
                groups_of_four,
            } => write!(
                f,
                "problem {problem} is missing from fewer than {groups_of_four} portfolios, \
                 so some group of 4 would present it four times"
            ),
            Infeasible::Special { repeated: [a, b, c] } => write!(
                f,
                "all portfolios but three are {{{a},{b},{c}}} and the other three each share exactly one \
                 distinct problem with it"
            ),
        }
    }
}

impl std::error::Error for Infeasible {}

fn portfolio_triples(portfolios: &[Portfolio]) -> Result<TupleSet> {
    let m = portfolios
        .iter()
        .flat_map(|p| p.problems.elements().iter().copied())
        .max()
        .unwrap_or(0) as usize;
    TupleSet::new(3, m, portfolios.iter().map(|p| p.problems.clone()))
}

/// Number of groups of four the canonical split uses.
pub fn groups_of_four(n: usize) -> usize {
    match n % 3 {
        0 => 0,
        1 => 1,
        _ => 2,
    }
}

pub fn feasible(portfolios: &[Portfolio]) -> Result<(), Infeasible> {
    let n = portfolios.len();
    let fours = groups_of_four(n);
    if n < 3 || n < 4 * fours {
        return Err(Infeasible::TooFewTeams { n });
    }
    if fours == 0 {
        return Ok(());
    }
    let ts = portfolio_triples(portfolios).map_err(|_| Infeasible::TooFewTeams { n })?;
    if let Some(problem) = unfair_element(&ts, fours) {
        return Err(Infeasible::ProblemTooCommon {
            problem,
            groups_of_four: fours,
        });
    }
    if fours == 2 {
        if let Some(repeated) = special_triple(&ts).expect("triples") {
            return Err(Infeasible::Special { repeated });
        }
    }
    Ok(())
}

/// Partition of team indices into groups; groups of four first.
pub fn build_groups(portfolios: &[Portfolio]) -> Result<Vec<Vec<usize>>, Infeasible> {
    feasible(portfolios)?;
    let n = portfolios.len();
    let fours = groups_of_four(n);
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut placed = vec![false; n];
    if fours > 0 {
        let ts = portfolio_triples(portfolios).expect("validated portfolios");
        debug_assert!(is_c_fair(&ts, fours));
        let total = if fours == 2 {
            color_2_triples(&ts)
        } else {
            solve_general(&ts, 1)
        };
        let total = total
            .expect("valid parameters")
            .expect("feasible portfolios admit a nice coloring");
        let partial = partialize(&ts, &total, &[]).expect("nice coloring");
        groups = pad_classes(&partial, 4);
        for &i in groups.iter().flatten() {
            placed[i] = true;
        }
    }
    let rest: Vec<usize> = (0..n).filter(|&i| !placed[i]).collect();
    groups.extend(rest.chunks(3).map(<[usize]>::to_vec));
    Ok(groups)
}

/// Classes of a partial coloring topped up to `size` with the smallest
/// uncolored indices. Adding tuples to a nice class keeps it nice.
fn pad_classes(partial: &Coloring, size: usize) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = (0..partial.colors()).map(|c| partial.class(c as Color)).collect();
    let mut spare = (0..partial.len()).filter(|&i| partial.get(i).is_none());
    for class in &mut classes {
        debug_assert!(class.len() <= size);
        while class.len() < size {
            class.push(spare.next().expect("enough teams"));
        }
        class.sort_unstable();
    }
    classes
}

/// A group and, for each of the three rounds, the problem each team presents
/// (indexed like `teams`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    pub teams: Vec<usize>,
    pub rounds: [Vec<Element>; ROUNDS],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    pub groups: Vec<Group>,
}

pub fn make_schedule(portfolios: &[Portfolio]) -> Result<Schedule, Infeasible> {
    let groups = build_groups(portfolios)?;
    let groups = groups
        .into_iter()
        .map(|teams| {
            let g = GroupBipartite::from_group(portfolios, &teams);
            let colors = konig_edge_color(&g).expect("groups respect the degree bound");
            let mut rounds: [Vec<Element>; ROUNDS] = std::array::from_fn(|_| vec![0; teams.len()]);
            for (&(pos, q), &round) in g.edges.iter().zip(&colors) {
                rounds[round][pos] = g.problems[q];
            }
            Group { teams, rounds }
        })
        .collect();
    Ok(Schedule { groups })
}

/// Checks a schedule from scratch: partition, group sizes, each team presents
/// each of its problems once, and no problem twice in a group-round.
pub fn validate_schedule(portfolios: &[Portfolio], schedule: &Schedule) -> Result<(), String> {
    let mut seen = vec![false; portfolios.len()];
    for (gi, group) in schedule.groups.iter().enumerate() {
        if !(3..=4).contains(&group.teams.len()) {
            return Err(format!("group {gi} has {} teams", group.teams.len()));
        }
        for &t in &group.teams {
            if t >= portfolios.len() || std::mem::replace(&mut seen[t], true) {
                return Err(format!("team index {t} missing or repeated"));
            }
        }
        for (pos, &t) in group.teams.iter().enumerate() {
            let mut presented: Vec<Element> = group
                .rounds
                .iter()
                .map(|round| round.get(pos).copied().unwrap_or(0))
                .collect();
            presented.sort_unstable();
            if presented != portfolios[t].problems.elements() {
                return Err(format!("team {} does not present its portfolio", portfolios[t].team));
            }
        }
        for (r, round) in group.rounds.iter().enumerate() {
            if round.len() != group.teams.len() {
                return Err(format!("group {gi} round {} has wrong length", r + 1));
            }
            let mut problems = round.clone();
            problems.sort_unstable();
            if problems.windows(2).any(|w| w[0] == w[1]) {
                return Err(format!("group {gi} round {} repeats a problem", r + 1));
            }
        }
    }
    if let Some(t) = seen.iter().position(|&s| !s) {
        return Err(format!("team {} is in no group", portfolios[t].team));
    }
    Ok(())
}

/// Machine-readable view with team names and problem labels.
#[derive(Debug, Clone, Serialize)]
pub struct ScheduleDocument {
    pub groups: Vec<GroupDocument>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupDocument {
    pub teams: Vec<String>,
    /// One map per round: team name to problem label.
    pub rounds: Vec<std::collections::BTreeMap<String, String>>,
}

impl Schedule {
    pub fn document(&self, portfolios: &[Portfolio], label: impl Fn(Element) -> String) -> ScheduleDocument {
        let groups = self
            .groups
            .iter()
            .map(|g| GroupDocument {
                teams: g.teams.iter().map(|&t| portfolios[t].team.clone()).collect(),
                rounds: g
                    .rounds
                    .iter()
                    .map(|round| {
                        g.teams
                            .iter()
                            .zip(round)
                            .map(|(&t, &p)| (portfolios[t].team.clone(), label(p)))
                            .collect()
                    })
                    .collect(),
            })
            .collect();
        ScheduleDocument { groups }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn portfolios(rows: &[[u32; 3]]) -> Vec<Portfolio> {
        rows.iter()
            .enumerate()
            .map(|(i, r)| Portfolio {
                team: format!("t{}", i + 1),
                problems: KTuple::new(r.to_vec()).unwrap(),
            })
            .collect()
    }

    fn disjoint(n: u32) -> Vec<Portfolio> {
        let rows: Vec<[u32; 3]> = (0..n).map(|i| [3 * i + 1, 3 * i + 2, 3 * i + 3]).collect();
        portfolios(&rows)
    }

    #[test]
    fn divisible_by_three() {
        let p = portfolios(&[[1, 2, 3]; 6]);
        assert_eq!(feasible(&p), Ok(()));
        let s = make_schedule(&p).unwrap();
        assert_eq!(s.groups.len(), 2);
        validate_schedule(&p, &s).unwrap();
        let p = portfolios(&[[1, 2, 3]; 9]);
        assert_eq!(
            build_groups(&p).unwrap(),
            vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]
        );
    }

    #[test]
    fn problem_in_all_four() {
        let p = portfolios(&[[1, 2, 3], [1, 4, 5], [2, 4, 5], [1, 6, 7]]);
        assert!(feasible(&p).is_ok());
        let p = portfolios(&[[1, 2, 3], [1, 4, 5], [1, 2, 4], [1, 6, 7]]);
        assert_eq!(
            feasible(&p),
            Err(Infeasible::ProblemTooCommon {
                problem: 1,
                groups_of_four: 1
            })
        );
    }

    #[test]
    fn too_few_teams() {
        for n in [0, 1, 2, 5] {
            assert_eq!(feasible(&disjoint(n)), Err(Infeasible::TooFewTeams { n: n as usize }));
            assert!(make_schedule(&disjoint(n)).is_err());
        }
    }

    #[test]
    fn special_eight() {
        let mut rows = vec![[1, 2, 3]; 5];
        rows.extend([[1, 4, 5], [2, 4, 6], [3, 7, 8]]);
        assert_eq!(
            feasible(&portfolios(&rows)),
            Err(Infeasible::Special { repeated: [1, 2, 3] })
        );
    }

    #[test]
    fn seven_teams_one_problem_nearly_everywhere() {
        let p = portfolios(&[
            [1, 2, 3],
            [1, 4, 5],
            [1, 2, 6],
            [1, 3, 7],
            [1, 5, 8],
            [1, 6, 9],
            [2, 4, 7],
        ]);
        let groups = build_groups(&p).unwrap();
        assert_eq!(groups[0].len(), 4);
        assert!(groups[0].contains(&6));
        let g = GroupBipartite::from_group(&p, &groups[0]);
        assert!(g.problem_degrees().iter().all(|&d| d <= 3));
        validate_schedule(&p, &make_schedule(&p).unwrap()).unwrap();
    }

    #[test]
    fn eight_disjoint() {
        let p = disjoint(8);
        let a = make_schedule(&p).unwrap();
        assert_eq!(a, make_schedule(&p).unwrap());
        assert_eq!(a.groups.iter().map(|g| g.teams.len()).collect::<Vec<_>>(), vec![4, 4]);
        validate_schedule(&p, &a).unwrap();
    }

    #[test]
    fn four_teams_use_everyone() {
        let p = portfolios(&[[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]);
        let s = make_schedule(&p).unwrap();
        assert_eq!(s.groups[0].teams, vec![0, 1, 2, 3]);
        validate_schedule(&p, &s).unwrap();
    }

    #[test]
    fn validator_catches_clash() {
        let p = portfolios(&[[1, 2, 3], [1, 4, 5], [1, 6, 7]]);
        let bad = Schedule {
            groups: vec![Group {
                teams: vec![0, 1, 2],
                rounds: [vec![1, 1, 1], vec![2, 4, 6], vec![3, 5, 7]],
            }],
        };
        assert!(validate_schedule(&p, &bad).is_err());
        validate_schedule(&p, &make_schedule(&p).unwrap()).unwrap();
    }
}
