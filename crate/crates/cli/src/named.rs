//! Graph mini-language: `path:4`, `complete:3`, `star:3`, `cycle:5`,
//! `empty:2`, `multipartite:1,2,2`; `,` between families is a disjoint
//! union, `+` between union expressions (in `--join`) is a join.

use anyhow::{anyhow, bail, Context, Result};
use gbei::graph::{disjoint_union, join_product, make_named, Graph, Named};

fn family(name: &str, args: &[usize]) -> Result<Named> {
    let one = || -> Result<usize> {
        match args {
            [k] => Ok(*k),
            _ => bail!("{name} takes exactly one size, got {}", args.len()),
        }
    };
    Ok(match name {
        "path" => Named::Path(one()?),
        "complete" => Named::Complete(one()?),
        "star" => Named::Star(one()?),
        "cycle" => Named::Cycle(one()?),
        "empty" => Named::Empty(one()?),
        "multipartite" => {
            let mut parts = args.to_vec();
            parts.sort_unstable();
            Named::CompleteMultipartite(parts)
        }
        _ => bail!("unknown family {name:?} (path, complete, star, cycle, empty, multipartite)"),
    })
}

fn number(tok: &str) -> Result<usize> {
    tok.trim()
        .parse()
        .with_context(|| format!("expected a size, got {tok:?}"))
}

/// A `,`-separated union of families. Bare numbers extend the previous
/// family's argument list, so `multipartite:1,2,path:3` is `K_{1,2} ⊔ P3`.
pub fn parse_union(expr: &str) -> Result<Graph> {
    let mut specs: Vec<(String, Vec<usize>)> = Vec::new();
    for tok in expr.split(',') {
        let tok = tok.trim();
        match tok.split_once(':') {
            Some((name, arg)) => specs.push((name.trim().to_string(), vec![number(arg)?])),
            None => match specs.last_mut() {
                Some((_, args)) => args.push(number(tok)?),
                None => bail!("graph expression {expr:?} must start with family:size"),
            },
        }
    }
    let parts = specs
        .iter()
        .map(|(name, args)| Ok(make_named(&family(name, args)?)?))
        .collect::<Result<Vec<_>>>()?;
    match parts.len() {
        1 => Ok(parts.into_iter().next().expect("one part")),
        _ => Ok(disjoint_union(&parts)?),
    }
}

/// `a+b+...` with each side a union expression.
pub fn parse_join(expr: &str) -> Result<Graph> {
    let parts = expr.split('+').map(parse_union).collect::<Result<Vec<_>>>()?;
    if parts.len() < 2 {
        return Err(anyhow!("--join needs at least two '+'-separated parts"));
    }
    Ok(join_product(&parts)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use gbei::graph::is_isomorphic;

    #[test]
    fn families() {
        assert_eq!(parse_union("path:4").unwrap().edge_count(), 3);
        assert_eq!(parse_union("complete:4").unwrap().edge_count(), 6);
        assert_eq!(parse_union("star:3").unwrap().n(), 4);
        assert_eq!(parse_union("multipartite:2,1,2").unwrap().edge_count(), 8);
        assert_eq!(parse_union("empty:3").unwrap().edge_count(), 0);
    }

    #[test]
    fn unions_and_joins() {
        let g = parse_union("complete:2,complete:2").unwrap();
        assert_eq!((g.n(), g.edge_count(), g.component_count()), (4, 2, 2));
        let g = parse_union("multipartite:1,2,path:3").unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 4));
        let b = parse_join("empty:1+empty:1,complete:2").unwrap();
        let whisker = Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4), (3, 4)]).unwrap();
        assert_eq!(is_isomorphic(&b, &whisker), Some(true));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_union("tree:3").is_err());
        assert!(parse_union("3").is_err());
        assert!(parse_union("path:x").is_err());
        assert!(parse_union("path:2,3").is_err());
        assert!(parse_join("path:3").is_err());
    }
}
