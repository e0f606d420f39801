use crate::error::Result;
use crate::population::{improves, Agent};

/// The `K` best distinct positions seen so far, ordered by fitness.
#[derive(Debug, Clone, PartialEq)]
pub struct Leaders<const K: usize> {
    entries: Vec<Agent>,
}

impl<const K: usize> Default for Leaders<K> {
    fn default() -> Self {
        Self { entries: Vec::with_capacity(K + 1) }
    }
}

impl<const K: usize> Leaders<K> {
    pub fn from_agents<'a>(agents: impl IntoIterator<Item = &'a Agent>) -> Result<Self> {
        let mut leaders = Self::default();
        for agent in agents {
            leaders.offer(agent)?;
        }
        Ok(leaders)
    }

    /// Considers `agent` for a leader slot. A position already held keeps the
    /// better of its two fitness values.
    pub fn offer(&mut self, agent: &Agent) -> Result<()> {
        let f = agent.value()?;
        if f.is_nan() {
            return Ok(());
        }
        if let Some(k) = self.entries.iter().position(|e| e.position == agent.position) {
            if improves(f, self.entries[k].fitness.unwrap()) {
                self.entries.remove(k);
            } else {
                return Ok(());
            }
        }
        let at = self.entries.iter().position(|e| f < e.fitness.unwrap()).unwrap_or(self.entries.len());
        if at < K {
            self.entries.insert(at, agent.clone());
            self.entries.truncate(K);
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Leader of rank `k` (0 = best); ranks not yet filled fall back to the
    /// worst available leader.
    pub fn get(&self, k: usize) -> &Agent {
        &self.entries[k.min(self.entries.len() - 1)]
    }

    pub fn entries(&self) -> &[Agent] {
        &self.entries
    }
}
