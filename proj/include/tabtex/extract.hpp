#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tabtex {

struct TabularSnippet {
    // Text strictly between \begin{tabular} and \end{tabular}, starting at
    // the column-specification group.
    std::string body;
    std::string source_id;
    // [start, end) offsets of the whole environment in the original document.
    size_t span_start = 0;
    size_t span_end = 0;
};

struct ExtractIssue {
    std::string message;
    size_t offset = 0; // offset of the offending \begin{tabular} in the document
};

struct ExtractResult {
    std::vector<TabularSnippet> snippets;
    std::vector<ExtractIssue> issues; // unterminated environments
};

// Returns every outermost tabular environment in the document. Comments are
// stripped before matching, so commented-out environments are never
// extracted; nested tabulars stay inside their parent snippet. A
// \begin{tabular} with no matching \end{tabular} is reported as an issue
// rather than aborting the scan.
ExtractResult extract_tabulars(std::string_view document,
                               std::string_view source_id = {});

// Removes %-to-end-of-line comments (an escaped \% survives). The optional
// offset map receives, for each kept byte, its offset in the input.
std::string strip_comments(std::string_view text,
                           std::vector<size_t>* offset_map = nullptr);

// Removes \cite/\citep/\citet/\ref with their arguments, strips comments,
// and collapses whitespace runs to single spaces. Total and idempotent.
std::string sanitize(std::string_view body);
TabularSnippet sanitize(const TabularSnippet& snippet);

} // namespace tabtex
