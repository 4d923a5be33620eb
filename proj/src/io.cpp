#include "scs/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace scs {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<Word> read_words(std::istream& in, const std::string& source_name) {
    std::vector<Word> words;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        try {
            words.push_back(Word::parse(text));
        } catch (const ParseError& e) {
            throw ParseError(source_name + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return words;
}

std::vector<Word> read_words_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open words file: " + path);
    return read_words(in, path);
}

void write_words(std::ostream& out, const std::vector<Word>& words) {
    for (const Word& w : words) out << w.str() << '\n';
}

void write_words_file(const std::string& path, const std::vector<Word>& words) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    write_words(out, words);
}

std::uint64_t file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file for digest: " + path);
    std::uint64_t h = 1469598103934665603ULL;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ULL;
        }
        if (!in) break;
    }
    return h;
}

}  // namespace scs
