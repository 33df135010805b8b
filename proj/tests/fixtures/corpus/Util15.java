import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class Util15 {
    private int size;
    private int capacity;
    private int limit;
    private int offset;
    private int width;
    private int height;
    private int depth;
    private int timeout;

    public long area(int cols, int rows) {
        long size = (long) cols * rows;
        int margin = cols + rows * 2;
        size += margin;
        return size;
    }

    public boolean contains(List<String> values, String title) {
        for (String s : values) {
            if (s.equals(title)) {
                return true;
            }
        }
        return false;
    }

    public int clamp(int value, int low, int high) {
        if (value < low) {
            return low;
        }
        if (value > high) {
            return high;
        }
        return value;
    }

    public double average(double[] counts) {
        if (counts.length == 0) {
            return 0;
        }
        double total = 0;
        for (double v : counts) {
            total = total + v;
        }
        return total / counts.length;
    }

    public String join(List<String> items, String sep) {
        StringBuilder out = new StringBuilder();
        for (int i = 0; i < items.size(); i++) {
            if (i > 0) {
                out.append(sep);
            }
            out.append(items.get(i));
        }
        return out.toString();
    }

    public double average(double[] counts) {
        if (counts.length == 0) {
            return 0;
        }
        double acc = 0;
        for (double v : counts) {
            acc = acc + v;
        }
        return acc / counts.length;
    }

    public long getTimeout() {
        return timeout;
    }

    public String describe(int code) {
        String text;
        switch (code) {
        case 0:
            text = "none";
            break;
        case 1:
            text = "one";
            break;
        default:
            text = "many";
            break;
        }
        return text;
    }

    public void reverse(int[] items) {
        int left = 0;
        int right = items.length - 1;
        while (left < right) {
            int t = items[left];
            items[left] = items[right];
            items[right] = t;
            left++;
            right--;
        }
    }

    public void swap(int[] numbers, int a, int b) {
        int tmp = numbers[a];
        numbers[a] = numbers[b];
        numbers[b] = tmp;
    }
}
