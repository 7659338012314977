#pragma once

#include <cstdio>
#include <cstdint>
#include <string>
#include <vector>

// Streaming JSON writer with caller-controlled key order and fixed float
// formatting (17 significant digits, so doubles survive a round trip and
// identical runs emit identical bytes).
class JsonWriter {
  public:
    std::string take() { return std::move(buf_); }

    void begin_obj() {
        comma();
        buf_ += '{';
        stack_.push_back(false);
    }
    void end_obj() {
        buf_ += '}';
        stack_.pop_back();
    }
    void begin_arr() {
        comma();
        buf_ += '[';
        stack_.push_back(false);
    }
    void end_arr() {
        buf_ += ']';
        stack_.pop_back();
    }
    void key(const char* k) {
        comma();
        buf_ += '"';
        buf_ += k;
        buf_ += "\":";
        pending_value_ = true;
    }
    void str(const std::string& s) {
        comma();
        buf_ += '"';
        for (char c : s) {
            switch (c) {
                case '"': buf_ += "\\\""; break;
                case '\\': buf_ += "\\\\"; break;
                case '\n': buf_ += "\\n"; break;
                case '\t': buf_ += "\\t"; break;
                case '\r': buf_ += "\\r"; break;
                default: buf_ += c;
            }
        }
        buf_ += '"';
    }
    void num(double v) {
        comma();
        char tmp[40];
        std::snprintf(tmp, sizeof tmp, "%.17g", v);
        buf_ += tmp;
    }
    void integer(long long v) {
        comma();
        buf_ += std::to_string(v);
    }
    void uinteger(unsigned long long v) {
        comma();
        buf_ += std::to_string(v);
    }
    void boolean(bool v) {
        comma();
        buf_ += v ? "true" : "false";
    }
    void null() {
        comma();
        buf_ += "null";
    }

  private:
    void comma() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (!stack_.empty()) {
            if (stack_.back()) buf_ += ',';
            stack_.back() = true;
        }
    }

    std::string buf_;
    std::vector<bool> stack_;  // per level: has the container seen a member
    bool pending_value_ = false;
};
