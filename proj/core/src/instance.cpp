#include "svreach/instance.hpp"

#include <charconv>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <zlib.h>

#include "svreach/errors.hpp"
#include "svreach/rng.hpp"

namespace svreach {

namespace {

// ---------------------------------------------------------------------------
// gzip-transparent input: zlib reads plain files as-is and inflates gzip ones.

class GzStreamBuf : public std::streambuf {
  public:
    explicit GzStreamBuf(const std::filesystem::path& path)
        : file_(gzopen(path.string().c_str(), "rb")) {
        if (file_ == nullptr) {
            throw std::runtime_error("cannot open " + path.string());
        }
        gzbuffer(file_, 1 << 16);
    }
    ~GzStreamBuf() override {
        if (file_ != nullptr) gzclose(file_);
    }
    GzStreamBuf(const GzStreamBuf&) = delete;
    GzStreamBuf& operator=(const GzStreamBuf&) = delete;

  protected:
    int_type underflow() override {
        const int got = gzread(file_, buffer_, sizeof(buffer_));
        if (got <= 0) return traits_type::eof();
        setg(buffer_, buffer_, buffer_ + got);
        return traits_type::to_int_type(buffer_[0]);
    }

  private:
    gzFile file_;
    char buffer_[1 << 16];
};

// ---------------------------------------------------------------------------
// line-level parsing shared by the materializing and the streaming reader

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

std::size_t split_fields(std::string_view line, Token* out, std::size_t max_fields,
                         std::size_t line_no) {
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (count == max_fields) {
            throw ParseError("too many fields", line_no, start + 1);
        }
        out[count++] = {line.substr(start, i - start), start + 1};
    }
    return count;
}

std::uint64_t parse_number(const Token& tok, std::size_t line_no) {
    std::uint64_t value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("expected a non-negative integer, got '" +
                             std::string(tok.text) + "'",
                         line_no, tok.column);
    }
    return value;
}

VertexId parse_vertex(const Token& tok, std::uint64_t n, std::size_t line_no) {
    const std::uint64_t value = parse_number(tok, line_no);
    if (value >= n) {
        throw ParseError("vertex id " + std::to_string(value) +
                             " out of range [0, " + std::to_string(n) + ")",
                         line_no, tok.column);
    }
    return static_cast<VertexId>(value);
}

/// Sink must provide on_header(n), on_edge(u, v), on_op(Operation).
template <typename Sink>
void parse_stream(std::istream& in, Sink&& sink) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    bool in_ops = false;
    std::uint64_t n = 0;
    Token fields[4];
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '#') continue;
        const std::size_t count = split_fields(line, fields, 3, line_no);
        if (count == 0) {
            if (have_header) in_ops = true; // separator between edges and ops
            continue;
        }
        const std::string_view tag = fields[0].text;
        if (!have_header) {
            if (tag != "n" || count != 2) {
                throw ParseError("expected header 'n <count>'", line_no, fields[0].column);
            }
            n = parse_number(fields[1], line_no);
            sink.on_header(n);
            have_header = true;
            continue;
        }
        if (count != 3) {
            throw ParseError("expected '<tag> <a> <b>'", line_no, fields[0].column);
        }
        const VertexId a = parse_vertex(fields[1], n, line_no);
        const VertexId b = parse_vertex(fields[2], n, line_no);
        if (tag == "e") {
            if (in_ops) {
                throw ParseError("initial edge after the operation section began",
                                 line_no, fields[0].column);
            }
            sink.on_edge(a, b);
        } else if (tag == "a") {
            in_ops = true;
            sink.on_op(Operation{OpTag::Add, a, b});
        } else if (tag == "d") {
            in_ops = true;
            sink.on_op(Operation{OpTag::Delete, a, b});
        } else if (tag == "q") {
            in_ops = true;
            sink.on_op(Operation{OpTag::Query, a, b});
        } else {
            throw ParseError("unknown line tag '" + std::string(tag) + "'",
                             line_no, fields[0].column);
        }
    }
    if (!have_header) {
        throw ParseError("missing 'n <count>' header", line_no + 1, 1);
    }
}

struct BuildSink {
    Instance inst;
    void on_header(std::uint64_t n) { inst.n = n; }
    void on_edge(VertexId u, VertexId v) { inst.initial_edges.emplace_back(u, v); }
    void on_op(const Operation& op) { inst.ops.push_back(op); }
};

// ---------------------------------------------------------------------------
// replay validation over an edge multiset

struct ReplayState {
    std::unordered_map<std::uint64_t, std::uint64_t> live;

    static std::uint64_t key(VertexId u, VertexId v) {
        return (static_cast<std::uint64_t>(u) << 32) | v;
    }
    void add(VertexId u, VertexId v) { ++live[key(u, v)]; }
    bool remove(VertexId u, VertexId v) {
        auto it = live.find(key(u, v));
        if (it == live.end() || it->second == 0) return false;
        if (--it->second == 0) live.erase(it);
        return true;
    }
};

struct ValidateSink {
    ReplayState state;
    std::uint64_t n = 0;
    std::size_t op_index = 0;

    void check(VertexId a, VertexId b) const {
        if (a >= n || b >= n) {
            throw ReplayError("vertex id out of range", op_index);
        }
    }
    void on_header(std::uint64_t count) { n = count; }
    void on_edge(VertexId u, VertexId v) { state.add(u, v); }
    void on_op(const Operation& op) {
        check(op.a, op.b);
        switch (op.tag) {
        case OpTag::Add: state.add(op.a, op.b); break;
        case OpTag::Delete:
            if (!state.remove(op.a, op.b)) {
                throw ReplayError("deletion of missing edge (" + std::to_string(op.a) +
                                      ", " + std::to_string(op.b) + ")",
                                  op_index);
            }
            break;
        case OpTag::Query: break;
        }
        ++op_index;
    }
};

char op_letter(OpTag tag) {
    switch (tag) {
    case OpTag::Add: return 'a';
    case OpTag::Delete: return 'd';
    case OpTag::Query: return 'q';
    }
    return '?';
}

} // namespace

Instance parse_instance(std::istream& in, std::string name) {
    BuildSink sink;
    parse_stream(in, sink);
    sink.inst.meta.name = std::move(name);
    return std::move(sink.inst);
}

void write_instance(const Instance& inst, std::ostream& out) {
    out << "n " << inst.n << '\n';
    for (const auto& [u, v] : inst.initial_edges) {
        out << "e " << u << ' ' << v << '\n';
    }
    if (!inst.ops.empty()) {
        out << '\n';
        for (const Operation& op : inst.ops) {
            out << op_letter(op.tag) << ' ' << op.a << ' ' << op.b << '\n';
        }
    }
}

std::string write_instance(const Instance& inst) {
    std::ostringstream out;
    write_instance(inst, out);
    return std::move(out).str();
}

Instance load_instance(const std::filesystem::path& path) {
    GzStreamBuf buf(path);
    std::istream in(&buf);
    return parse_instance(in, path.stem().string());
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_instance(inst, out);
}

void validate_replay(const Instance& inst) {
    ValidateSink sink;
    sink.on_header(inst.n);
    std::size_t i = 0;
    for (const auto& [u, v] : inst.initial_edges) {
        if (u >= inst.n || v >= inst.n) {
            throw ReplayError("initial edge " + std::to_string(i) + " out of range", 0);
        }
        sink.on_edge(u, v);
        ++i;
    }
    for (const Operation& op : inst.ops) sink.on_op(op);
}

void validate_replay_file(const std::filesystem::path& path) {
    GzStreamBuf buf(path);
    std::istream in(&buf);
    ValidateSink sink;
    parse_stream(in, sink);
}

ShuffleResult shuffle_updates(const Instance& inst, std::uint64_t seed) {
    ShuffleResult result;
    result.instance = inst;
    auto& ops = result.instance.ops;

    std::vector<std::size_t> positions;
    std::vector<Operation> updates;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (ops[i].tag != OpTag::Query) {
            positions.push_back(i);
            updates.push_back(ops[i]);
        }
    }
    std::mt19937_64 rng(seed);
    fisher_yates_shuffle(updates, rng);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        ops[positions[i]] = updates[i];
    }

    // Repair: walk the stream; a deletion with no live edge swaps places with
    // the next insertion of the same pair, which must exist because the
    // original stream was valid and the multiset is unchanged.
    ReplayState state;
    for (const auto& [u, v] : result.instance.initial_edges) state.add(u, v);
    std::unordered_map<std::uint64_t, std::deque<std::size_t>> pending_adds;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (ops[i].tag == OpTag::Add) {
            pending_adds[ReplayState::key(ops[i].a, ops[i].b)].push_back(i);
        }
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
        Operation& op = ops[i];
        if (op.tag == OpTag::Add) {
            state.add(op.a, op.b);
            auto& queue = pending_adds[ReplayState::key(op.a, op.b)];
            queue.pop_front();
        } else if (op.tag == OpTag::Delete) {
            if (state.remove(op.a, op.b)) continue;
            auto it = pending_adds.find(ReplayState::key(op.a, op.b));
            if (it == pending_adds.end() || it->second.empty()) {
                throw ReplayError("shuffle input was not a valid instance", i);
            }
            const std::size_t j = it->second.front();
            std::swap(ops[i], ops[j]);
            ++result.repairs;
            // ops[i] is now the matching Add; process it in place.
            state.add(ops[i].a, ops[i].b);
            it->second.pop_front();
        }
    }
    validate_replay(result.instance);
    return result;
}

} // namespace svreach
