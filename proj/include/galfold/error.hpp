#ifndef GALFOLD_ERROR_HPP
#define GALFOLD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace galfold {

enum class Errc {
  UnsupportedType,
  ForeignRoot,
  NotCoweight,
  IndexOutOfRange,
  JunctionMismatch,
  EndpointNotVertex,
  NotSimpleRoot,
  NotOriginBased,
  OperatorUndefined,
  BudgetExceeded,
  OutsideDomain,
  ChartMismatch,
  RegularityViolated,
  MarginExceeded,
  NoWitness,
  ParseError,
  RankUnsupported,
  InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, long index = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code),
        index_(index) {}

  Errc code() const { return code_; }
  /// Offending index where one applies (alcove/panel/gallery index), else -1.
  long index() const { return index_; }

 private:
  Errc code_;
  long index_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg, long index = -1) {
  throw Error(code, msg, index);
}

}  // namespace galfold

#endif  // GALFOLD_ERROR_HPP
