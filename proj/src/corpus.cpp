#include "textlaws/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace textlaws {

namespace {

bool is_ascii_letter(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Length of the UTF-8 sequence starting at i, or 0 if malformed.
std::size_t utf8_seq_len(std::string_view s, std::size_t i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) return 1;
    std::size_t n = 0;
    if ((c & 0xE0) == 0xC0) {
        if (c < 0xC2) return 0;  // overlong
        n = 2;
    } else if ((c & 0xF0) == 0xE0) {
        n = 3;
    } else if ((c & 0xF8) == 0xF0) {
        if (c > 0xF4) return 0;
        n = 4;
    } else {
        return 0;
    }
    if (i + n > s.size()) return 0;
    for (std::size_t k = 1; k < n; ++k) {
        if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return 0;
    }
    return n;
}

void validate_utf8(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t n = utf8_seq_len(s, i);
        if (n == 0) {
            throw Error("malformed UTF-8 at byte offset " + std::to_string(i));
        }
        i += n;
    }
}

std::string_view strip_gutenberg_text(std::string_view content) {
    std::size_t body_begin = 0;
    std::size_t body_end = content.size();
    std::size_t pos = 0;
    while (pos < content.size()) {
        std::size_t eol = content.find('\n', pos);
        if (eol == std::string_view::npos) eol = content.size();
        std::string_view line = content.substr(pos, eol - pos);
        if (line.find("*** START OF") != line.npos || line.find("***START OF") != line.npos) {
            body_begin = std::min(eol + 1, content.size());
        } else if (line.find("*** END OF") != line.npos || line.find("***END OF") != line.npos) {
            body_end = pos;
            break;
        }
        pos = eol + 1;
    }
    if (body_end < body_begin) return {};
    return content.substr(body_begin, body_end - body_begin);
}

bool is_u2019(std::string_view s, std::size_t i) {
    return static_cast<unsigned char>(s[i]) == 0xE2 &&
           static_cast<unsigned char>(s[i + 1]) == 0x80 &&
           static_cast<unsigned char>(s[i + 2]) == 0x99;
}

}  // namespace

const char* to_string(DocKind kind) {
    switch (kind) {
        case DocKind::book: return "book";
        case DocKind::speech: return "speech";
        case DocKind::synthetic: return "synthetic";
    }
    return "book";
}

DocKind doc_kind_from_string(const std::string& name) {
    if (name == "book") return DocKind::book;
    if (name == "speech") return DocKind::speech;
    if (name == "synthetic") return DocKind::synthetic;
    throw Error("unknown document kind: " + name);
}

TokenSequence tokenize(const RawDocument& doc, const TokenizerRules& rules) {
    validate_utf8(doc.content);

    std::string_view text = doc.content;
    if (rules.strip_gutenberg) text = strip_gutenberg_text(text);

    TokenSequence out;
    std::string cur;
    auto flush = [&out, &cur] {
        // apostrophes are token characters only between letters
        std::size_t b = cur.find_first_not_of('\'');
        if (b != std::string::npos) {
            std::size_t e = cur.find_last_not_of('\'');
            out.emplace_back(cur.substr(b, e - b + 1));
        }
        cur.clear();
    };

    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 0x80) {
            if (is_ascii_letter(c)) {
                cur.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c + 32 : c));
            } else if (c == '\'' && rules.keep_apostrophes && !cur.empty()) {
                cur.push_back('\'');
            } else {
                flush();
            }
            ++i;
        } else {
            std::size_t n = utf8_seq_len(text, i);  // already validated
            if (n == 3 && is_u2019(text, i) && rules.keep_apostrophes && !cur.empty()) {
                cur.push_back('\'');
            } else {
                flush();
            }
            i += n;
        }
    }
    flush();
    return out;
}

EncodedSequence encode(const TokenSequence& tokens) {
    EncodedSequence seq;
    seq.ids.reserve(tokens.size());
    std::unordered_map<std::string, std::uint32_t> index;
    index.reserve(tokens.size() / 4 + 16);
    for (const std::string& tok : tokens) {
        auto [it, inserted] = index.try_emplace(tok, static_cast<std::uint32_t>(seq.vocabulary.size()));
        if (inserted) seq.vocabulary.push_back(tok);
        seq.ids.push_back(it->second);
    }
    return seq;
}

TokenSequence decode(const EncodedSequence& seq) {
    TokenSequence tokens;
    tokens.reserve(seq.ids.size());
    for (std::uint32_t id : seq.ids) {
        if (id >= seq.vocabulary.size()) throw Error("id out of vocabulary range");
        tokens.push_back(seq.vocabulary[id]);
    }
    return tokens;
}

CorpusSummary summarize(const std::string& id, DocKind kind, const EncodedSequence& seq) {
    return CorpusSummary{id, kind, seq.T(), seq.Nt()};
}

RawDocument load_document(const std::string& path, DocKind kind) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    RawDocument doc;
    doc.id = std::filesystem::path(path).stem().string();
    doc.content = buf.str();
    doc.kind = kind;
    return doc;
}

}  // namespace textlaws
