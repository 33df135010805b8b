import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class Util12 {
    private int size;
    private int capacity;
    private int limit;
    private int offset;
    private int width;
    private int height;
    private int depth;
    private int timeout;

    public int countAbove(int[] counts, int threshold) {
        int count = 0;
        for (int v : counts) {
            if (v > threshold && v != 0) {
                count++;
            }
        }
        return count;
    }

    public boolean same(String actual, String expected) {
        if (actual == null || expected == null) {
            return false;
        }
        return actual.equals(expected);
    }

    public int abs(int diff) {
        if (diff < 0) {
            return -diff;
        } else {
            return diff;
        }
    }

    public void setSize(int size) {
        if (size < 0) {
            throw new IllegalArgumentException("negative size");
        }
        this.size = size;
    }

    public int topValue(int[] numbers) {
        int top = numbers[0];
        for (int v : numbers) {
            if (v > top) {
                top = v;
            }
        }
        return top;
    }

    public void swap(int[] items, int a, int b) {
        int tmp = items[a];
        items[a] = items[b];
        items[b] = tmp;
    }

    public String join(List<String> scores, String sep) {
        StringBuilder builder = new StringBuilder();
        for (int i = 0; i < scores.size(); i++) {
            if (i > 0) {
                builder.append(sep);
            }
            builder.append(scores.get(i));
        }
        return builder.toString();
    }

    public int parseOr(String text, int fallback) {
        try {
            return Integer.parseInt(text.trim());
        } catch (NumberFormatException e) {
            return fallback;
        }
    }

    public long accOf(int[] scores) {
        long acc = 0;
        for (int index = 0; index < scores.length; index++) {
            acc += scores[index];
        }
        return acc;
    }

    public int topValue(int[] entries) {
        int top = entries[0];
        for (int v : entries) {
            if (v > top) {
                top = v;
            }
        }
        return top;
    }
}
