#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qfid/errors.hpp"
#include "qfid/matrix_io.hpp"
#include "qfid/states.hpp"

namespace qfid {
namespace {

ComplexMatrix read(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

bool bit_identical(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.dim() == b.dim() &&
         std::memcmp(a.dense().data(), b.dense().data(), sizeof(Complex) * a.dim() * a.dim()) == 0;
}

TEST(MatrixIo, OneByOne) {
  std::ostringstream out;
  write_matrix(out, ComplexMatrix::identity(1));
  EXPECT_EQ(out.str(), "dim 1\n1+0i\n");
}

TEST(MatrixIo, RoundTripIsBitExact) {
  for (const std::size_t d : {1, 2, 7, 32}) {
    ComplexMatrix m = random_density(d, d, d).matrix();
    m(0, 0) = Complex(m(0, 0).real(), -0.0);
    std::ostringstream out;
    write_matrix(out, m);
    EXPECT_TRUE(bit_identical(read(out.str()), m));
  }
}

TEST(MatrixIo, ToleratesCrLfAndBlankTrailer) {
  const ComplexMatrix m = read("dim 2\r\n0.5+0i 0+0i\r\n0+0i 0.5\r\n\n");
  EXPECT_EQ(m(1, 1), Complex(0.5));
}

TEST(MatrixIo, RejectsMalformedInput) {
  for (const char* bad : {"", "dim\n", "dim 0\n", "dim x\n", "size 1\n1\n", "dim 2\n1 0\n",
                          "dim 2\n1 0 0\n0 1\n", "dim 1\n1+0i\nextra\n", "dim 1\nnan\n",
                          "dim 1\ninf+0i\n", "dim 1\n1+0j\n"}) {
    EXPECT_THROW(read(bad), ParseError) << '"' << bad << '"';
  }
}

TEST(MatrixIo, FileErrorsAreIoErrors) {
  EXPECT_THROW(load_matrix("/nonexistent/dir/m.txt"), IoError);
  EXPECT_THROW(save_matrix("/nonexistent/dir/m.txt", ComplexMatrix::identity(1)), IoError);
}

TEST(MatrixIo, SaveLoadFile) {
  const std::filesystem::path p = std::filesystem::temp_directory_path() / "qfid_io_test.txt";
  const ComplexMatrix m = random_density(5, 3, 8).matrix();
  save_matrix(p, m);
  EXPECT_TRUE(bit_identical(load_matrix(p), m));
  std::filesystem::remove(p);
}

}  // namespace
}  // namespace qfid
