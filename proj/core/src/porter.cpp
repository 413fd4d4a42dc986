#include <string>

#include "dacfake/textprep.hpp"

// Porter, "An algorithm for suffix stripping", Program 14(3) 1980. The
// original published rule set (step 2 maps ABLI -> ABLE, no LOGI rule).

namespace dacfake {

namespace {

class Stemmer {
 public:
  explicit Stemmer(std::string word) : b_(std::move(word)), k_(b_.size()) {}

  std::string run() {
    if (k_ <= 2) return b_;  // length 1-2 words are left alone
    step1a();
    step1b();
    step1c();
    step2();
    step3();
    step4();
    step5a();
    step5b();
    return b_.substr(0, k_);
  }

 private:
  std::string b_;
  std::size_t k_;  // current length
  std::size_t j_ = 0;  // stem length while matching a suffix

  bool is_consonant(std::size_t i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !is_consonant(i - 1);
      default:
        return true;
    }
  }

  // measure of b_[0..j_): [C](VC)^m[V]
  int measure() const {
    int n = 0;
    std::size_t i = 0;
    while (true) {
      if (i >= j_) return n;
      if (!is_consonant(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i >= j_) return n;
        if (is_consonant(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i >= j_) return n;
        if (!is_consonant(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (std::size_t i = 0; i < j_; ++i)
      if (!is_consonant(i)) return true;
    return false;
  }

  bool double_consonant(std::size_t i) const {
    if (i < 1) return false;
    if (b_[i] != b_[i - 1]) return false;
    return is_consonant(i);
  }

  // consonant-vowel-consonant ending at i, last consonant not w, x or y
  bool cvc(std::size_t i) const {
    if (i < 2 || !is_consonant(i) || is_consonant(i - 1) || !is_consonant(i - 2))
      return false;
    char c = b_[i];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(const char* s) {
    std::size_t len = std::char_traits<char>::length(s);
    if (len > k_) return false;
    if (b_.compare(k_ - len, len, s) != 0) return false;
    j_ = k_ - len;
    return true;
  }

  void set_to(const char* s) {
    std::size_t len = std::char_traits<char>::length(s);
    b_.replace(j_, len, s);
    k_ = j_ + len;
  }

  void replace_if_m_positive(const char* s) {
    if (measure() > 0) set_to(s);
  }

  void step1a() {
    if (b_[k_ - 1] != 's') return;
    if (ends("sses")) {
      k_ -= 2;
    } else if (ends("ies")) {
      set_to("i");
    } else if (b_[k_ - 2] != 's') {
      --k_;
    }
  }

  void step1b() {
    if (ends("eed")) {
      if (measure() > 0) --k_;
      return;
    }
    if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_consonant(k_ - 1)) {
        char c = b_[k_ - 1];
        if (c != 'l' && c != 's' && c != 'z') --k_;
      } else {
        j_ = k_;
        if (measure() == 1 && cvc(k_ - 1)) set_to("e");
      }
    }
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) b_[k_ - 1] = 'i';
  }

  void step2() {
    if (k_ < 2) return;
    switch (b_[k_ - 2]) {
      case 'a':
        if (ends("ational")) { replace_if_m_positive("ate"); break; }
        if (ends("tional")) { replace_if_m_positive("tion"); break; }
        break;
      case 'c':
        if (ends("enci")) { replace_if_m_positive("ence"); break; }
        if (ends("anci")) { replace_if_m_positive("ance"); break; }
        break;
      case 'e':
        if (ends("izer")) { replace_if_m_positive("ize"); break; }
        break;
      case 'l':
        if (ends("abli")) { replace_if_m_positive("able"); break; }
        if (ends("alli")) { replace_if_m_positive("al"); break; }
        if (ends("entli")) { replace_if_m_positive("ent"); break; }
        if (ends("eli")) { replace_if_m_positive("e"); break; }
        if (ends("ousli")) { replace_if_m_positive("ous"); break; }
        break;
      case 'o':
        if (ends("ization")) { replace_if_m_positive("ize"); break; }
        if (ends("ation")) { replace_if_m_positive("ate"); break; }
        if (ends("ator")) { replace_if_m_positive("ate"); break; }
        break;
      case 's':
        if (ends("alism")) { replace_if_m_positive("al"); break; }
        if (ends("iveness")) { replace_if_m_positive("ive"); break; }
        if (ends("fulness")) { replace_if_m_positive("ful"); break; }
        if (ends("ousness")) { replace_if_m_positive("ous"); break; }
        break;
      case 't':
        if (ends("aliti")) { replace_if_m_positive("al"); break; }
        if (ends("iviti")) { replace_if_m_positive("ive"); break; }
        if (ends("biliti")) { replace_if_m_positive("ble"); break; }
        break;
      default:
        break;
    }
  }

  void step3() {
    if (k_ < 1) return;
    switch (b_[k_ - 1]) {
      case 'e':
        if (ends("icate")) { replace_if_m_positive("ic"); break; }
        if (ends("ative")) { replace_if_m_positive(""); break; }
        if (ends("alize")) { replace_if_m_positive("al"); break; }
        break;
      case 'i':
        if (ends("iciti")) { replace_if_m_positive("ic"); break; }
        break;
      case 'l':
        if (ends("ical")) { replace_if_m_positive("ic"); break; }
        if (ends("ful")) { replace_if_m_positive(""); break; }
        break;
      case 's':
        if (ends("ness")) { replace_if_m_positive(""); break; }
        break;
      default:
        break;
    }
  }

  void step4() {
    if (k_ < 2) return;
    switch (b_[k_ - 2]) {
      case 'a':
        if (ends("al")) break;
        return;
      case 'c':
        if (ends("ance")) break;
        if (ends("ence")) break;
        return;
      case 'e':
        if (ends("er")) break;
        return;
      case 'i':
        if (ends("ic")) break;
        return;
      case 'l':
        if (ends("able")) break;
        if (ends("ible")) break;
        return;
      case 'n':
        if (ends("ant")) break;
        if (ends("ement")) break;
        if (ends("ment")) break;
        if (ends("ent")) break;
        return;
      case 'o':
        if (ends("ion") && j_ > 0 && (b_[j_ - 1] == 's' || b_[j_ - 1] == 't'))
          break;
        if (ends("ou")) break;
        return;
      case 's':
        if (ends("ism")) break;
        return;
      case 't':
        if (ends("ate")) break;
        if (ends("iti")) break;
        return;
      case 'u':
        if (ends("ous")) break;
        return;
      case 'v':
        if (ends("ive")) break;
        return;
      case 'z':
        if (ends("ize")) break;
        return;
      default:
        return;
    }
    if (measure() > 1) k_ = j_;
  }

  void step5a() {
    if (k_ < 2) return;
    j_ = k_;
    if (b_[k_ - 1] != 'e') return;
    int m = measure();
    if (m > 1 || (m == 1 && !cvc(k_ - 2))) --k_;
  }

  void step5b() {
    j_ = k_;
    if (b_[k_ - 1] == 'l' && double_consonant(k_ - 1) && measure() > 1) --k_;
  }
};

}  // namespace

std::string porter_stem(const std::string& word) {
  for (char c : word)
    if (c < 'a' || c > 'z') return word;  // only plain lowercase words
  return Stemmer(word).run();
}

}  // namespace dacfake
