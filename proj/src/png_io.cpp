#include "bevnav/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <vector>

#include "bevnav/errors.hpp"

namespace bevnav {
namespace {

struct ReadCtx {
    FILE* fp = nullptr;
    png_structp png = nullptr;
    png_infop info = nullptr;

    ~ReadCtx() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
        if (fp) std::fclose(fp);
    }
};

struct WriteCtx {
    FILE* fp = nullptr;
    png_structp png = nullptr;
    png_infop info = nullptr;

    ~WriteCtx() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
        if (fp) std::fclose(fp);
    }
};

void open_reader(ReadCtx& ctx, const std::string& path) {
    ctx.fp = std::fopen(path.c_str(), "rb");
    if (!ctx.fp) throw Error(Stage::io, "cannot open " + path);
    ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (ctx.png) ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.png || !ctx.info) throw Error(Stage::io, "libpng initialization failed");
}

void open_writer(WriteCtx& ctx, const std::string& path) {
    ctx.fp = std::fopen(path.c_str(), "wb");
    if (!ctx.fp) throw Error(Stage::io, "cannot open " + path + " for writing");
    ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (ctx.png) ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.png || !ctx.info) throw Error(Stage::io, "libpng initialization failed");
}

void read_rows(png_structp png, std::uint8_t* data, std::size_t stride, int height) {
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y) rows[y] = data + stride * y;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
}

void write_rows(png_structp png, const std::uint8_t* data, std::size_t stride, int height) {
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y) rows[y] = const_cast<png_bytep>(data + stride * y);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
}

}  // namespace

LabelImage load_label_png(const std::string& path) {
    ReadCtx ctx;
    open_reader(ctx, path);
    if (setjmp(png_jmpbuf(ctx.png))) {
        throw Error(Stage::io, "failed to decode " + path);
    }
    png_init_io(ctx.png, ctx.fp);
    png_read_info(ctx.png, ctx.info);

    const int bit_depth = png_get_bit_depth(ctx.png, ctx.info);
    const int color_type = png_get_color_type(ctx.png, ctx.info);
    if (color_type != PNG_COLOR_TYPE_GRAY || bit_depth != 8) {
        throw Error(Stage::io, path + " is not an 8-bit single-channel PNG label map");
    }
    png_set_interlace_handling(ctx.png);
    png_read_update_info(ctx.png, ctx.info);

    LabelImage image;
    image.width = static_cast<int>(png_get_image_width(ctx.png, ctx.info));
    image.height = static_cast<int>(png_get_image_height(ctx.png, ctx.info));
    image.data.resize(static_cast<std::size_t>(image.width) * image.height);
    read_rows(ctx.png, image.data.data(), static_cast<std::size_t>(image.width), image.height);
    return image;
}

void save_label_png(const LabelImage& image, const std::string& path) {
    if (image.width <= 0 || image.height <= 0 ||
        image.data.size() != static_cast<std::size_t>(image.width) * image.height) {
        throw Error(Stage::io, "label image dimensions are inconsistent");
    }
    WriteCtx ctx;
    open_writer(ctx, path);
    if (setjmp(png_jmpbuf(ctx.png))) {
        throw Error(Stage::io, "failed to encode " + path);
    }
    png_init_io(ctx.png, ctx.fp);
    png_set_IHDR(ctx.png, ctx.info, image.width, image.height, 8, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(ctx.png, ctx.info);
    write_rows(ctx.png, image.data.data(), static_cast<std::size_t>(image.width), image.height);
}

ColorImage load_color_png(const std::string& path) {
    ReadCtx ctx;
    open_reader(ctx, path);
    if (setjmp(png_jmpbuf(ctx.png))) {
        throw Error(Stage::io, "failed to decode " + path);
    }
    png_init_io(ctx.png, ctx.fp);
    png_read_info(ctx.png, ctx.info);

    const int bit_depth = png_get_bit_depth(ctx.png, ctx.info);
    const int color_type = png_get_color_type(ctx.png, ctx.info);
    if (color_type != PNG_COLOR_TYPE_RGB || bit_depth != 8) {
        throw Error(Stage::io, path + " is not an 8-bit 3-channel PNG frame");
    }
    png_set_interlace_handling(ctx.png);
    png_read_update_info(ctx.png, ctx.info);

    ColorImage image;
    image.width = static_cast<int>(png_get_image_width(ctx.png, ctx.info));
    image.height = static_cast<int>(png_get_image_height(ctx.png, ctx.info));
    image.data.resize(static_cast<std::size_t>(image.width) * image.height * 3);
    read_rows(ctx.png, image.data.data(), static_cast<std::size_t>(image.width) * 3, image.height);
    return image;
}

void save_color_png(const ColorImage& image, const std::string& path) {
    if (image.width <= 0 || image.height <= 0 ||
        image.data.size() != static_cast<std::size_t>(image.width) * image.height * 3) {
        throw Error(Stage::io, "color image dimensions are inconsistent");
    }
    WriteCtx ctx;
    open_writer(ctx, path);
    if (setjmp(png_jmpbuf(ctx.png))) {
        throw Error(Stage::io, "failed to encode " + path);
    }
    png_init_io(ctx.png, ctx.fp);
    png_set_IHDR(ctx.png, ctx.info, image.width, image.height, 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(ctx.png, ctx.info);
    write_rows(ctx.png, image.data.data(), static_cast<std::size_t>(image.width) * 3, image.height);
}

}  // namespace bevnav
