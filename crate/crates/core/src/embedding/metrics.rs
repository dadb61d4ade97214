use std::collections::VecDeque;

use serde::Serialize;

use super::{EmbeddedMultigraph, EmbeddingError};

/// Distance summary of a connected multigraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    pub diameter: usize,
    pub radius: usize,
    /// Smallest vertex id attaining the radius.
    pub center: usize,
    pub max_degree: usize,
    pub min_degree: usize,
}

impl EmbeddedMultigraph {
    /// BFS distances from a set of sources; unreachable vertices get `None`.
    pub fn distances_from(&self, sources: &[usize]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let next = dist[v].unwrap() + 1;
            for (w, _) in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(next);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn eccentricity(&self, v: usize) -> Result<usize, EmbeddingError> {
        if v >= self.n {
            return Err(EmbeddingError::VertexOutOfRange(v));
        }
        self.distances_from(&[v])
            .into_iter()
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
            .ok_or(EmbeddingError::Disconnected)
    }

    pub fn eccentricities(&self) -> Result<Vec<usize>, EmbeddingError> {
        self.require_connected()?;
        // Flat adjacency and reused buffers; this is the all-pairs hot loop.
        let mut offsets = Vec::with_capacity(self.n + 1);
        let mut targets = Vec::with_capacity(2 * self.edges.len());
        offsets.push(0);
        for v in 0..self.n {
            targets.extend(self.neighbors(v).map(|(w, _)| w as u32));
            offsets.push(targets.len());
        }
        let mut dist = vec![u32::MAX; self.n];
        let mut queue = Vec::with_capacity(self.n);
        let mut ecc = Vec::with_capacity(self.n);
        for s in 0..self.n {
            dist.fill(u32::MAX);
            queue.clear();
            dist[s] = 0;
            queue.push(s as u32);
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head] as usize;
                head += 1;
                let next = dist[v] + 1;
                for &w in &targets[offsets[v]..offsets[v + 1]] {
                    if dist[w as usize] == u32::MAX {
                        dist[w as usize] = next;
                        queue.push(w);
                    }
                }
            }
            ecc.push(dist[*queue.last().unwrap() as usize] as usize);
        }
        Ok(ecc)
    }

    pub fn metrics(&self) -> Result<GraphMetrics, EmbeddingError> {
        let ecc = self.eccentricities()?;
        let diameter = *ecc.iter().max().unwrap();
        let radius = *ecc.iter().min().unwrap();
        let center = ecc.iter().position(|&e| e == radius).unwrap();
        let degrees = (0..self.n).map(|v| self.degree(v));
        Ok(GraphMetrics {
            diameter,
            radius,
            center,
            max_degree: degrees.clone().max().unwrap(),
            min_degree: degrees.min().unwrap(),
        })
    }
}
