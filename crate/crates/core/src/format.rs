//! Text encodings: graph6 words and the `{v: w₁ w₂ …; …}` adjacency-list notation.

use crate::error::ParseError;
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

const HEADER: &[u8] = b">>graph6<<";

/// Decodes one graph6 word (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.as_bytes();
    let start = if bytes.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let body = &bytes[start..];
    if body.is_empty() {
        return Err(ParseError::Empty);
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::NonPrintable {
                offset: start + i,
                byte: b,
            });
        }
    }

    let (n, mut pos) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else {
        if body.len() < 4 {
            return Err(ParseError::Truncated {
                expected: start + 4,
                found: start + body.len(),
            });
        }
        if body[1] == 126 {
            return Err(ParseError::TooLarge {
                offset: start + 1,
                n: usize::MAX,
            });
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(ParseError::TooLarge { offset: start, n });
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() < pos + nbytes {
        return Err(ParseError::Truncated {
            expected: start + pos + nbytes,
            found: start + body.len(),
        });
    }
    if body.len() > pos + nbytes {
        return Err(ParseError::TrailingData {
            offset: start + pos + nbytes,
        });
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        let last = body[pos + nbytes - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(ParseError::Padding {
                offset: start + pos + nbytes - 1,
            });
        }
    }
    pos += nbytes;
    debug_assert_eq!(pos, body.len());
    Ok(Graph::from_rows_unchecked(adj))
}

/// Encodes `g` as a graph6 word, without header or newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.extend([126, 63, 63 + (n >> 6) as u8, 63 + (n & 63) as u8]);
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses `{0: 1 4; 1: 0; …}`. Every vertex needs exactly one record listing its
/// full neighbourhood, and listings must agree in both directions.
pub fn parse_adjacency_list(text: &str) -> Result<Graph, ParseError> {
    let records = AdjacencyParser::new(text).records()?;
    let n = records.len();
    if n > MAX_VERTICES {
        return Err(ParseError::TooManyRecords(n));
    }
    let mut rows: Vec<Option<VertexSet>> = vec![None; n];
    for (id, nbrs) in &records {
        let id = *id;
        if id >= n {
            return Err(ParseError::OutOfRange { record: id, id, n });
        }
        if rows[id].is_some() {
            return Err(ParseError::DuplicateRecord { record: id });
        }
        let mut row = VertexSet::EMPTY;
        for &w in nbrs {
            if w >= n {
                return Err(ParseError::OutOfRange {
                    record: id,
                    id: w,
                    n,
                });
            }
            if w == id {
                return Err(ParseError::SelfLoop { record: id });
            }
            row.insert(w);
        }
        rows[id] = Some(row);
    }
    let rows: Vec<VertexSet> = rows
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or(ParseError::MissingRecord { vertex: v }))
        .collect::<Result<_, _>>()?;
    for (v, row) in rows.iter().enumerate() {
        for w in row.iter() {
            if !rows[w].contains(v) {
                return Err(ParseError::Asymmetric {
                    record: v,
                    neighbor: w,
                });
            }
        }
    }
    Ok(Graph::from_rows_unchecked(
        rows.iter().map(|r| r.bits()).collect(),
    ))
}

/// Writes `g` in the notation accepted by [`parse_adjacency_list`].
pub fn emit_adjacency_list(g: &Graph) -> String {
    let mut out = String::from("{");
    for v in 0..g.order() {
        if v > 0 {
            out.push_str("; ");
        }
        out.push_str(&v.to_string());
        out.push(':');
        for w in g.neighbors(v).iter() {
            out.push(' ');
            out.push_str(&w.to_string());
        }
    }
    out.push('}');
    out
}

struct AdjacencyParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> AdjacencyParser<'a> {
    fn new(text: &'a str) -> Self {
        AdjacencyParser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", b as char)))
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let begin = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if begin == self.pos {
            return Err(self.err("expected a vertex id"));
        }
        std::str::from_utf8(&self.bytes[begin..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.err("vertex id too large"))
    }

    fn records(mut self) -> Result<Vec<(usize, Vec<usize>)>, ParseError> {
        self.expect(b'{')?;
        let mut out = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b'}') {
            self.pos += 1;
            return self.finish(out);
        }
        loop {
            let id = self.number()?;
            self.expect(b':')?;
            let mut nbrs = Vec::new();
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(b) if b.is_ascii_digit() => nbrs.push(self.number()?),
                    Some(b';') => {
                        self.pos += 1;
                        break;
                    }
                    Some(b'}') => break,
                    Some(_) => return Err(self.err("unexpected character")),
                    None => return Err(self.err("unterminated list, expected '}'")),
                }
            }
            out.push((id, nbrs));
            self.skip_ws();
            if self.peek() == Some(b'}') {
                self.pos += 1;
                return self.finish(out);
            }
        }
    }

    fn finish(
        mut self,
        out: Vec<(usize, Vec<usize>)>,
    ) -> Result<Vec<(usize, Vec<usize>)>, ParseError> {
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.err("trailing characters after '}'"));
        }
        Ok(out)
    }
}

/// A graph read from a multi-graph text stream, with the 1-based line it started on.
#[derive(Clone, Debug)]
pub struct SourcedGraph {
    pub line: usize,
    pub graph: Graph,
}

/// Error from [`read_graphs`], naming the offending line.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {source}")]
pub struct StreamError {
    pub line: usize,
    #[source]
    pub source: ParseError,
}

/// Reads graph6 lines and adjacency-list records from one text.
///
/// A line whose first non-blank character is `{` starts an adjacency-list
/// record that runs until its closing `}` (possibly across lines); any other
/// nonblank line is a graph6 word.
pub fn read_graphs(text: &str) -> Result<Vec<SourcedGraph>, StreamError> {
    let mut out = Vec::new();
    let mut lines = text.lines().enumerate().peekable();
    while let Some((idx, raw)) = lines.next() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('{') {
            let mut record = line.to_string();
            while !record.contains('}') {
                match lines.next() {
                    Some((_, more)) => {
                        record.push('\n');
                        record.push_str(more);
                    }
                    None => break,
                }
            }
            let graph = parse_adjacency_list(&record).map_err(|source| StreamError {
                line: idx + 1,
                source,
            })?;
            out.push(SourcedGraph {
                line: idx + 1,
                graph,
            });
        } else {
            let graph = parse_graph6(line).map_err(|source| StreamError {
                line: idx + 1,
                source,
            })?;
            out.push(SourcedGraph {
                line: idx + 1,
                graph,
            });
        }
    }
    Ok(out)
}
