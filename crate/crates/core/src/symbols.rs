use std::collections::HashMap;

/// Interned names for one id space (states or letters).
///
/// Ids are dense indices in declaration order; every canonical ordering in
/// the crate follows them.
#[derive(Debug, Clone, Default)]
pub struct SymbolTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl SymbolTable {
    /// Builds a table, returning the first duplicated name on failure.
    pub fn new<I, S>(names: I) -> Result<Self, String>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut table = SymbolTable::default();
        for name in names {
            let name = name.into();
            if table.index.contains_key(&name) {
                return Err(name);
            }
            table.index.insert(name.clone(), table.names.len());
            table.names.push(name);
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Parses a word given either as whitespace/comma separated names or,
    /// when every character is itself a name, as a run of characters.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>, String> {
        let tokens: Vec<&str> = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        let mut word = Vec::new();
        for token in tokens {
            if let Some(id) = self.id(token) {
                word.push(id);
                continue;
            }
            if token.contains('.') {
                let parts: Option<Vec<usize>> = token.split('.').map(|p| self.id(p)).collect();
                if let Some(parts) = parts {
                    word.extend(parts);
                    continue;
                }
            }
            for c in token.chars() {
                let mut buf = [0u8; 4];
                match self.id(c.encode_utf8(&mut buf)) {
                    Some(id) => word.push(id),
                    None => return Err(token.to_string()),
                }
            }
        }
        Ok(word)
    }

    /// Renders a word: characters run together when all names are one
    /// character long, dot separated otherwise.
    pub fn render_word(&self, word: &[usize]) -> String {
        let sep = if self.single_char_names() { "" } else { "." };
        word.iter()
            .map(|&id| self.name(id))
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn single_char_names(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }
}

impl PartialEq for SymbolTable {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for SymbolTable {}
