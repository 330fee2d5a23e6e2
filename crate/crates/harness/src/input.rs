//! graph6 line sources.

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

/// One non-blank input line, numbered from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphLine {
    pub line: usize,
    pub text: String,
}

/// Reads non-blank, non-header lines in chunks. A leading `>>graph6<<`
/// header is stripped.
pub struct LineReader {
    inner: Box<dyn BufRead + Send>,
    line: usize,
}

impl LineReader {
    pub fn new(inner: Box<dyn BufRead + Send>) -> Self {
        LineReader { inner, line: 0 }
    }

    /// Up to `max` further lines; empty at end of input.
    pub fn next_chunk(&mut self, max: usize) -> io::Result<Vec<GraphLine>> {
        let mut out = Vec::new();
        let mut buf = String::new();
        while out.len() < max {
            buf.clear();
            if self.inner.read_line(&mut buf)? == 0 {
                break;
            }
            self.line += 1;
            let text = buf.trim();
            let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
            if !text.is_empty() {
                out.push(GraphLine {
                    line: self.line,
                    text: text.to_string(),
                });
            }
        }
        Ok(out)
    }

    pub fn read_all(mut self) -> io::Result<Vec<GraphLine>> {
        let mut all = Vec::new();
        loop {
            let chunk = self.next_chunk(4096)?;
            if chunk.is_empty() {
                return Ok(all);
            }
            all.extend(chunk);
        }
    }
}

/// `-` is standard input; anything else is a file path.
pub fn read_source(path: &str) -> io::Result<LineReader> {
    let inner: Box<dyn BufRead + Send> = if path == "-" {
        Box::new(BufReader::new(io::stdin()))
    } else {
        Box::new(BufReader::new(File::open(Path::new(path))?))
    };
    Ok(LineReader::new(inner))
}
