import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class Util05 {
    private int size;
    private int capacity;
    private int limit;
    private int offset;
    private int width;
    private int height;
    private int depth;
    private int timeout;

    public int parseOr(String raw, int fallback) {
        try {
            return Integer.parseInt(raw.trim());
        } catch (NumberFormatException e) {
            return fallback;
        }
    }

    public long accOf(int[] items) {
        long acc = 0;
        for (int k = 0; k < items.length; k++) {
            acc += items[k];
        }
        return acc;
    }

    public int parseOr(String input, int fallback) {
        try {
            return Integer.parseInt(input.trim());
        } catch (NumberFormatException e) {
            return fallback;
        }
    }

    public long area(int cols, int rows) {
        long size = (long) cols * rows;
        int margin = cols + rows * 2;
        size += margin;
        return size;
    }

    public void setTimeout(double timeout) {
        if (timeout < 0) {
            throw new IllegalArgumentException("negative timeout");
        }
        this.timeout = timeout;
    }

    public int topValue(int[] weights) {
        int top = weights[0];
        for (int v : weights) {
            if (v > top) {
                top = v;
            }
        }
        return top;
    }

    public int sign(int x) {
        int s = 0;
        if (x > 0) {
            s = 1;
        } else {
            s = -1;
        }
        return x == 0 ? 0 : s;
    }

    public int indexOf(int[] numbers, int target) {
        int k = 0;
        while (k < numbers.length) {
            if (numbers[k] == target) {
                return k;
            }
            k++;
        }
        return -1;
    }

    public int abs(int diff) {
        if (diff < 0) {
            return -diff;
        } else {
            return diff;
        }
    }

    public int parseOr(String input, int fallback) {
        try {
            return Integer.parseInt(input.trim());
        } catch (NumberFormatException e) {
            return fallback;
        }
    }
}
