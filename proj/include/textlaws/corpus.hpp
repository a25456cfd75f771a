#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "textlaws/error.hpp"

namespace textlaws {

enum class DocKind { book, speech, synthetic };

const char* to_string(DocKind kind);
DocKind doc_kind_from_string(const std::string& name);

struct RawDocument {
    std::string id;
    std::string content;
    DocKind kind = DocKind::book;
};

struct TokenizerRules {
    // Keep apostrophes that sit between letters ("don't"); when false the
    // apostrophe is just another separator.
    bool keep_apostrophes = true;
    // Cut everything outside the "*** START OF / *** END OF" markers of a
    // Project Gutenberg file. Off by default; stripping is never guessed.
    bool strip_gutenberg = false;
};

using TokenSequence = std::vector<std::string>;

// A text as dense integer word ids, assigned in first-appearance order.
struct EncodedSequence {
    std::vector<std::uint32_t> ids;
    std::vector<std::string> vocabulary;  // id -> word

    std::size_t T() const { return ids.size(); }
    std::size_t Nt() const { return vocabulary.size(); }
};

struct CorpusSummary {
    std::string id;
    DocKind kind = DocKind::book;
    std::size_t T = 0;
    std::size_t Nt = 0;
};

// Lowercased maximal runs of ASCII letters, apostrophes kept only between
// letters; digits, punctuation and whitespace separate. U+2019 counts as an
// apostrophe; any other non-ASCII character is a separator.
// Throws Error naming the byte offset on malformed UTF-8.
TokenSequence tokenize(const RawDocument& doc, const TokenizerRules& rules = {});

EncodedSequence encode(const TokenSequence& tokens);
TokenSequence decode(const EncodedSequence& seq);

CorpusSummary summarize(const std::string& id, DocKind kind, const EncodedSequence& seq);

RawDocument load_document(const std::string& path, DocKind kind = DocKind::book);

}  // namespace textlaws
