#pragma once

#include <string>
#include <utility>
#include <vector>

namespace epur {

/// Small static scatter/line plot writer; enough for result figures.
class SvgPlot {
  public:
    SvgPlot(int width, int height, std::string title);

    void set_labels(std::string xlabel, std::string ylabel);

    void add_points(const std::vector<std::pair<double, double>>& pts,
                    const std::string& color, double radius = 2.5);
    void add_line(const std::vector<std::pair<double, double>>& pts,
                  const std::string& color, double stroke_width = 1.5,
                  bool dashed = false);

    std::string render() const;
    void write(const std::string& path) const;

  private:
    struct Series {
        std::vector<std::pair<double, double>> pts;
        std::string color;
        double size = 0.0;
        bool is_line = false;
        bool dashed = false;
    };

    int width_;
    int height_;
    std::string title_;
    std::string xlabel_;
    std::string ylabel_;
    std::vector<Series> series_;
};

} // namespace epur
