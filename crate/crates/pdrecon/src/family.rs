//! Family-spec grammar for naming graphs on the command line.
//!
//! ```text
//! spec     = prefix* base
//! prefix   = "k23:" | "corona:" [count ":"] | "copies:" count ":"
//!          | "leaves:" vertex "," count ":"
//! base     = name ":" args
//! args     = int ("," int)*
//! ```
//!
//! Base names: `path`, `cycle`, `complete`, `complete_bipartite`, `wheel`,
//! `star`, `star_edge`, `star_pendant`, `k2t_edge`, `hypercube`, `paper_Gn`
//! (alias `gn`), `grid`, `empty`. `corona:` without a count adds one leaf per
//! vertex. Example: `k23:corona:complete:3` is `K^{2,3}(K₃ ∘ K₁)`.

use pdrecon_core::graph::{self, FamilySpec, LeafTarget};
use pdrecon_core::Graph;

#[derive(Debug, thiserror::Error)]
pub enum SpecError {
    #[error("`{0}` is not a family spec")]
    NotASpec(String),
    #[error("`{name}` expects {expected}")]
    Arity { name: String, expected: &'static str },
    #[error("`{0}` is not a non-negative integer")]
    BadNumber(String),
    #[error(transparent)]
    Graph(#[from] pdrecon_core::Error),
}

fn number(tok: &str) -> Result<usize, SpecError> {
    tok.trim()
        .parse()
        .map_err(|_| SpecError::BadNumber(tok.to_owned()))
}

fn numbers(args: &str) -> Result<Vec<usize>, SpecError> {
    args.split(',').map(number).collect()
}

/// True when `s` starts like a family spec (so it is not taken as a path).
pub fn looks_like_spec(s: &str) -> bool {
    let head = s.split(':').next().unwrap_or("");
    s.contains(':') && NAMES.contains(&head)
}

const NAMES: &[&str] = &[
    "k23",
    "corona",
    "copies",
    "leaves",
    "empty",
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "wheel",
    "star",
    "star_edge",
    "star_pendant",
    "k2t_edge",
    "hypercube",
    "paper_Gn",
    "gn",
    "grid",
];

fn base_spec(name: &str, a: &[usize]) -> Option<Result<FamilySpec, &'static str>> {
    use FamilySpec::*;
    let one = |f: fn(usize) -> FamilySpec| match a {
        [x] => Ok(f(*x)),
        _ => Err("one integer argument"),
    };
    let two = |f: fn(usize, usize) -> FamilySpec| match a {
        [x, y] => Ok(f(*x, *y)),
        _ => Err("two integer arguments"),
    };
    Some(match name {
        "path" => one(Path),
        "cycle" => one(Cycle),
        "complete" => one(Complete),
        "complete_bipartite" => two(CompleteBipartite),
        "wheel" => one(Wheel),
        "star" => one(Star),
        "star_edge" => one(StarEdge),
        "star_pendant" => one(StarPendant),
        "k2t_edge" => one(K2tEdge),
        "hypercube" => one(Hypercube),
        "paper_Gn" | "gn" => one(PaperGn),
        "grid" => two(Grid),
        _ => return None,
    })
}

/// Builds the graph a spec names.
pub fn parse_spec(spec: &str) -> Result<Graph, SpecError> {
    let not_spec = || SpecError::NotASpec(spec.to_owned());
    let (head, rest) = spec.split_once(':').ok_or_else(not_spec)?;
    match head {
        "k23" => {
            let inner = parse_spec(rest)?;
            let name = inner.name().map(|n| format!("K23({n})"));
            let g = graph::k23_expansion(&inner)?;
            Ok(rename(g, name))
        }
        "corona" => {
            let (r, inner) = match rest.split_once(':') {
                Some((count, tail)) if count.chars().all(|c| c.is_ascii_digit()) => {
                    (number(count)?, tail)
                }
                _ => (1, rest),
            };
            let inner = parse_spec(inner)?;
            let name = inner.name().map(|n| format!("{n}o{r}K1"));
            Ok(rename(graph::corona(&inner, r)?, name))
        }
        "copies" => {
            let (count, tail) = rest.split_once(':').ok_or_else(|| SpecError::Arity {
                name: "copies".into(),
                expected: "`copies:D:<spec>`",
            })?;
            let d = number(count)?;
            if d == 0 {
                return Err(SpecError::Arity {
                    name: "copies".into(),
                    expected: "D >= 1",
                });
            }
            let inner = parse_spec(tail)?;
            let mut g = inner.clone();
            for _ in 1..d {
                g = graph::disjoint_union(&g, &inner)?;
            }
            let name = inner.name().map(|n| format!("{d}{n}"));
            Ok(rename(g.clear_name(), name))
        }
        "leaves" => {
            let (args, tail) = rest.split_once(':').ok_or_else(|| SpecError::Arity {
                name: "leaves".into(),
                expected: "`leaves:V,R:<spec>`",
            })?;
            let a = numbers(args)?;
            let [v, r] = a[..] else {
                return Err(SpecError::Arity {
                    name: "leaves".into(),
                    expected: "two integer arguments",
                });
            };
            let inner = parse_spec(tail)?;
            Ok(graph::add_leaves(&inner, LeafTarget::Vertex(v), r)?)
        }
        "empty" => {
            let n = number(rest)?;
            Ok(Graph::empty(n)?.with_name(format!("E{n}")))
        }
        name => {
            let args = numbers(rest)?;
            match base_spec(name, &args) {
                None => Err(not_spec()),
                Some(Err(expected)) => Err(SpecError::Arity {
                    name: name.to_owned(),
                    expected,
                }),
                Some(Ok(fs)) => Ok(graph::generate(fs)?),
            }
        }
    }
}

fn rename(g: Graph, name: Option<String>) -> Graph {
    match name {
        Some(n) => g.with_name(n),
        None => g.clear_name(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bases() {
        assert_eq!(parse_spec("path:5").unwrap().size(), 4);
        assert_eq!(parse_spec("complete_bipartite:3,4").unwrap().size(), 12);
        assert_eq!(parse_spec("gn:3").unwrap().order(), 11);
        assert_eq!(parse_spec("paper_Gn:4").unwrap().order(), 19);
        assert_eq!(parse_spec("grid:5,12").unwrap().order(), 60);
        assert_eq!(parse_spec("empty:3").unwrap().size(), 0);
        assert!(matches!(parse_spec("grid:5"), Err(SpecError::Arity { .. })));
        assert!(matches!(parse_spec("banana:5"), Err(SpecError::NotASpec(_))));
        assert!(matches!(parse_spec("path:x"), Err(SpecError::BadNumber(_))));
        assert!(matches!(parse_spec("cycle:2"), Err(SpecError::Graph(_))));
    }

    #[test]
    fn prefixes() {
        let g = parse_spec("k23:cycle:5").unwrap();
        assert_eq!((g.order(), g.size()), (20, 30));
        let g = parse_spec("corona:2:path:3").unwrap();
        assert_eq!((g.order(), g.size()), (9, 8));
        let g = parse_spec("k23:corona:complete:3").unwrap();
        assert_eq!(g.order(), 6 + 3 * 6);
        let g = parse_spec("copies:3:complete:2").unwrap();
        assert_eq!((g.order(), g.size(), g.components().len()), (6, 3, 3));
        let g = parse_spec("leaves:0,3:path:2").unwrap();
        assert_eq!(g.degree(0), 4);
        assert!(looks_like_spec("k23:cycle:5"));
        assert!(looks_like_spec("path:4"));
        assert!(!looks_like_spec("graphs/a.json"));
        assert!(!looks_like_spec("C:/x"));
    }
}
