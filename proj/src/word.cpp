#include "csf/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace csf {

std::vector<Word> runs(const Word& w) {
  std::vector<Word> out;
  Word cur;
  for (int c : w) {
    if (!cur.empty() && c <= cur.back()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
    cur.push_back(c);
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Composition run_type(const Word& w) {
  if (w.empty()) throw UsageError("run_type: empty word");
  std::vector<int> lens;
  int cur = 0;
  int last = 0;
  for (int c : w) {
    if (cur > 0 && c <= last) {
      lens.push_back(cur);
      cur = 0;
    }
    ++cur;
    last = c;
  }
  lens.push_back(cur);
  return Composition(std::move(lens));
}

Composition word_shape(const Word& w) { return run_type(w).conjugate(); }

bool is_yamanouchi(const Word& w) {
  std::vector<int> m;
  for (int c : w) {
    if (c < 1) return false;
    if (static_cast<size_t>(c) > m.size()) m.resize(static_cast<size_t>(c), 0);
    ++m[static_cast<size_t>(c - 1)];
    if (c > 1 && m[static_cast<size_t>(c - 1)] > m[static_cast<size_t>(c - 2)]) return false;
  }
  return true;
}

std::vector<int> word_content(const Word& w) {
  std::vector<int> m;
  for (int c : w) {
    if (static_cast<size_t>(c) > m.size()) m.resize(static_cast<size_t>(c), 0);
    ++m[static_cast<size_t>(c - 1)];
  }
  return m;
}

Word parse_compact_word(const std::string& text) {
  Word out;
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw UsageError("compact word '" + text + "': " + why);
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '[') {
      size_t close = text.find(']', i);
      if (close == std::string::npos) fail("unclosed '['");
      std::string body = text.substr(i + 1, close - i - 1);
      long a = 0, b = 0;
      size_t comma = body.find(',');
      try {
        if (comma == std::string::npos) {
          a = 1;
          b = std::stol(body);
        } else {
          a = std::stol(body.substr(0, comma));
          b = std::stol(body.substr(comma + 1));
        }
      } catch (...) {
        fail("bad interval '[" + body + "]'");
      }
      if (a < 1 || b < a) fail("empty interval '[" + body + "]'");
      for (long v = a; v <= b; ++v) out.push_back(static_cast<int>(v));
      i = close + 1;
    } else if (ch == '(') {
      size_t close = text.find(')', i);
      if (close == std::string::npos) fail("unclosed '('");
      if (close == i + 1) fail("empty group");
      for (size_t j = i + 1; j < close; ++j) {
        char d = text[j];
        if (d < '1' || d > '9') fail(std::string("bad letter '") + d + "' in group");
        out.push_back(d - '0');
      }
      i = close + 1;
    } else if (ch >= '1' && ch <= '9') {
      out.push_back(ch - '0');
      ++i;
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
  }
  return out;
}

std::string word_str(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

Word parse_word(const std::string& text) {
  Word out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("bad word '" + text + "'");
    int v = std::stoi(item);
    if (v < 1) throw UsageError("word letters must be positive");
    out.push_back(v);
  }
  return out;
}

}  // namespace csf
