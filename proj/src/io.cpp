#include "dkern/io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "dkern/errors.hpp"

namespace dkern {
namespace {

// Cursor over one line; columns are 1-based.
class LineScanner {
 public:
  LineScanner(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }

  std::string_view word() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  long integer(const char* what) {
    skip_space();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    long value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail(std::string(what) + " out of range");
    if (ec != std::errc()) fail(std::string("expected ") + what);
    pos_ += static_cast<std::size_t>(ptr - first);
    if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != ',' &&
        text_[pos_] != ':')
      fail(std::string("unexpected character after ") + what);
    return value;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // Column of the next token.
  int mark() {
    skip_space();
    return column();
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(column(), message); }
  [[noreturn]] void fail_at(int col, const std::string& message) const { throw ParseError(message, line_, col); }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    bool blank = true;
    for (char c : line) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (!blank) lines.push_back({number, line});
    if (text.empty()) break;
  }
  return lines;
}

Digraph parse_circulant(LineScanner& s, int cap) {
  const long m = s.integer("order");
  if (m < 2) s.fail("circulant order must be at least 2");
  if (m > cap) s.fail("order " + std::to_string(m) + " exceeds cap " + std::to_string(cap));
  s.expect(':');
  std::vector<int> offsets;
  do {
    const int col = s.mark();
    const long j = s.integer("residue");
    if (j % m == 0 || j >= m || j <= -m)
      s.fail_at(col, "residue " + std::to_string(j) + " is not a nonzero residue mod " + std::to_string(m));
    offsets.push_back(static_cast<int>(j));
  } while (s.accept(','));
  if (!s.at_end()) s.fail("unexpected text after residue list");
  return construct_circulant(CirculantSpec::from_offsets(static_cast<int>(m), offsets));
}

}  // namespace

DigraphDocument parse_digraph(std::string_view text, std::string name, int cap) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty input: expected 'digraph <n>' or 'circulant <m> : J'", 1, 1);
  LineScanner head(lines[0].text, lines[0].number);
  const auto keyword = head.word();
  DigraphDocument doc{std::move(name), std::string(text), {}};

  if (keyword == "circulant") {
    doc.digraph = parse_circulant(head, cap);
    if (lines.size() > 1) throw ParseError("circulant input must be a single line", lines[1].number, 1);
    return doc;
  }
  if (keyword != "digraph") head.fail("expected 'digraph' or 'circulant'");

  const long n = head.integer("vertex count");
  if (n < 0) head.fail("negative vertex count");
  if (n > cap) head.fail("vertex count " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  if (!head.at_end()) head.fail("unexpected text after vertex count");

  DigraphBuilder b(static_cast<int>(n), cap);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    LineScanner s(lines[i].text, lines[i].number);
    const int cu = s.mark();
    const long u = s.integer("tail vertex");
    const int cv = s.mark();
    const long v = s.integer("head vertex");
    if (!s.at_end()) s.fail("expected exactly two vertices");
    const auto range = [&](long x) { return "vertex " + std::to_string(x) + " out of range for order " + std::to_string(n); };
    if (u < 0 || u >= n) s.fail_at(cu, range(u));
    if (v < 0 || v >= n) s.fail_at(cv, range(v));
    if (u == v) s.fail_at(cu, "loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    b.add_arc(static_cast<int>(u), static_cast<int>(v));
  }
  doc.digraph = std::move(b).build();
  return doc;
}

std::string render_edge_list(const Digraph& d) {
  std::string out = "digraph " + std::to_string(d.order()) + "\n";
  for (auto [u, v] : d.arc_list()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string render_dot(const Digraph& d, std::string_view name) {
  std::string out = "digraph " + std::string(name) + " {\n";
  for (int v = 0; v < d.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : d.arc_list()) out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace dkern
